#include "permcover/integer_math.hpp"

#include <cmath>

namespace permcover {

std::uint64_t isqrt_floor(std::uint64_t x) noexcept {
  // Bisection on [0, 2^32): r*r never overflows.
  std::uint64_t lo = 0;
  std::uint64_t hi = std::uint64_t{1} << 32;
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    if (mid * mid <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::uint64_t isqrt_ceil(std::uint64_t x) noexcept {
  const auto r = isqrt_floor(x);
  return r * r == x ? r : r + 1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) noexcept {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) noexcept { return -floor_div(-a, b); }

std::int64_t floor_sqrt_expr(std::uint64_t x, std::int64_t c, std::int64_t d) noexcept {
  return floor_div(static_cast<std::int64_t>(isqrt_floor(x)) + c, d);
}

std::int64_t ceil_sqrt_expr(std::uint64_t x, std::int64_t c, std::int64_t d) noexcept {
  return ceil_div(static_cast<std::int64_t>(isqrt_ceil(x)) + c, d);
}

bool is_pronic(std::int64_t n) noexcept {
  if (n < 2) return false;
  const auto t = static_cast<std::int64_t>(isqrt_floor(static_cast<std::uint64_t>(n)));
  return t * (t + 1) == n;
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

long double log_big(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  const auto bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 64) return std::log(static_cast<long double>(static_cast<std::uint64_t>(x)));
  const auto shift = static_cast<unsigned>(bits - 64);
  const auto top = static_cast<std::uint64_t>(x >> shift);
  return std::log(static_cast<long double>(top)) + static_cast<long double>(shift) * std::log(2.0L);
}

}  // namespace permcover
