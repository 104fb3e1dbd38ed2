#pragma once

#include <cstddef>
#include <string>

#include "permcover/integer_math.hpp"

namespace permcover {

/// Natural logarithm of a positive quantity too large to hold directly.
struct LogValue {
  long double ln = 0.0L;

  long double value() const;
  friend auto operator<=>(const LogValue&, const LogValue&) = default;
};

/// ln(n!) via lgammal.
long double log_factorial(std::size_t n);

/// Outcome of comparing analytic quantities with a relative margin.
enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);

/// Default relative margin inside which a comparison is inconclusive.
inline constexpr long double kDefaultMargin = 1e-9L;

/// Kloeve's upper bound on |B_{n,r}|. The first branch applies for
/// 2r <= n-1, the second for 2r >= n-1; at 2r = n-1 the smaller is used.
/// Throws DomainError unless 0 <= r <= n-1.
LogValue ball_size_kloeve_bound(std::size_t n, int r);

/// F(n, rt) = (n!)^{(2rt-n)/n} prod_{i=rt}^{n-1} (i!)^{2/i} / (n-1)!,
/// evaluated in log space. Requires n+1 <= 2rt and rt <= n-1.
long double auxiliary_f(std::size_t n, int rt);
LogValue log_auxiliary_f(std::size_t n, int rt);

/// n - ceil(sqrt(2n ln n + 2n)) with its validity annotation.
struct LminBound {
  int value = 0;
  /// True when F(n, value) < 1 was verified, which makes the bound rigorous
  /// for every code of size n.
  bool certified = false;
};

LminBound lmin_lower_bound(std::size_t n, long double margin = kDefaultMargin);

/// Smallest n0 >= 2 such that lmin_lower_bound(n).certified holds for all
/// n in [n0, max_n]; returns max_n + 1 if the top of the range fails.
std::size_t lmin_validity_threshold(std::size_t max_n, long double margin = kDefaultMargin);

/// Whether code_size balls of radius rt-1 fail to cover S_n, i.e.
/// code_size * |B_{n,rt-1}| < n!. Uses the exact ball size when the window
/// DP (or enumeration) is feasible; otherwise compares against Kloeve's
/// bound, which can only prove `holds`. Throws DomainError for rt < 1.
Verdict sphere_covering_check(const BigInt& code_size, std::size_t n, int rt, long double margin = kDefaultMargin);

/// Comparison of the cyclic-block and identity-block composed codes of
/// length n = t*m with equal covering radius r = r(G_m).
struct CodeSizeComparison {
  BigInt m_cyc;
  BigInt m_id;
  LogValue lhs;  ///< ln(M_cyc / M_id), exact sizes
  LogValue rhs;  ///< ln of 2^{2t+2} sqrt(t) (2 pi t)^t (m^2 e^{2 - sqrt m})^t
  Verdict verdict = Verdict::inconclusive;
};

/// Requires t >= 1 and m >= 2.
CodeSizeComparison mcyc_mid_inequality(std::size_t t, std::size_t m, long double margin = kDefaultMargin);

}  // namespace permcover
