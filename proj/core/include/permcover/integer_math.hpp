#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcover {

using BigInt = boost::multiprecision::cpp_int;

/// floor(sqrt(x)), exact.
std::uint64_t isqrt_floor(std::uint64_t x) noexcept;

/// ceil(sqrt(x)), exact.
std::uint64_t isqrt_ceil(std::uint64_t x) noexcept;

/// floor((sqrt(x) + c) / d) for d > 0, exact. Uses floor(sqrt x) + c being
/// integer so the inner floor can be taken first.
std::int64_t floor_sqrt_expr(std::uint64_t x, std::int64_t c, std::int64_t d) noexcept;

/// ceil((sqrt(x) + c) / d) for d > 0, exact.
std::int64_t ceil_sqrt_expr(std::uint64_t x, std::int64_t c, std::int64_t d) noexcept;

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept;
std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept;

/// k(k+1)/2
constexpr std::int64_t triangular(std::int64_t k) noexcept { return k * (k + 1) / 2; }

/// True iff n = t(t+1) for some integer t >= 1.
bool is_pronic(std::int64_t n) noexcept;

BigInt factorial(unsigned n);

/// Natural log of a positive big integer, accurate to long double precision.
long double log_big(const BigInt& x);

}  // namespace permcover
