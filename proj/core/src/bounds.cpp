#include "permcover/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "permcover/composed_code.hpp"
#include "permcover/cyclic_code.hpp"
#include "permcover/errors.hpp"
#include "permcover/oracle.hpp"

namespace permcover {

long double LogValue::value() const { return std::exp(ln); }

long double log_factorial(std::size_t n) { return std::lgamma(static_cast<long double>(n) + 1.0L); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

// sum_{i=lo}^{hi} (2/i) ln(i!)
long double factorial_power_sum(std::size_t lo, std::size_t hi) {
  long double s = 0.0L;
  for (auto i = lo; i <= hi; ++i) s += 2.0L * log_factorial(i) / static_cast<long double>(i);
  return s;
}

Verdict compare(long double lhs, long double rhs, long double margin) {
  const auto slack = margin * std::max<long double>(1.0L, std::fabs(rhs));
  if (lhs < rhs - slack) return Verdict::holds;
  if (lhs > rhs + slack) return Verdict::fails;
  return Verdict::inconclusive;
}

}  // namespace

LogValue ball_size_kloeve_bound(std::size_t n, int r) {
  if (r < 0 || static_cast<std::size_t>(r) + 1 > std::max<std::size_t>(n, 1)) {
    throw DomainError("kloeve bound: requires 0 <= r <= n-1");
  }
  const auto ur = static_cast<std::size_t>(r);
  const auto ln = static_cast<long double>(n);
  long double best = INFINITY;
  if (2 * ur + 1 <= n) {
    const auto w = 2 * ur + 1;
    best = std::min(best, (ln - 2.0L * r) / static_cast<long double>(w) * log_factorial(w) +
                              factorial_power_sum(ur + 1, 2 * ur));
  }
  if (2 * ur + 1 >= n) {
    best = std::min(best, (2.0L * r + 2.0L - ln) / ln * log_factorial(n) + factorial_power_sum(ur + 1, n - 1));
  }
  return {best};
}

LogValue log_auxiliary_f(std::size_t n, int rt) {
  if (rt < 0 || 2 * static_cast<std::size_t>(rt) < n + 1 || static_cast<std::size_t>(rt) + 1 > n) {
    throw DomainError("F(n, rt): requires (n+1)/2 <= rt <= n-1");
  }
  const auto ln = static_cast<long double>(n);
  return {-log_factorial(n - 1) + (2.0L * rt - ln) / ln * log_factorial(n) +
          factorial_power_sum(static_cast<std::size_t>(rt), n - 1)};
}

long double auxiliary_f(std::size_t n, int rt) { return log_auxiliary_f(n, rt).value(); }

LminBound lmin_lower_bound(std::size_t n, long double margin) {
  if (n < 2) throw DomainError("lmin_lower_bound: requires n >= 2");
  const auto ln = static_cast<long double>(n);
  const auto root = std::ceil(std::sqrt(2.0L * ln * std::log(ln) + 2.0L * ln));
  LminBound out;
  out.value = static_cast<int>(n) - static_cast<int>(root);
  if (out.value >= 1 && 2 * static_cast<std::size_t>(out.value) >= n + 1 &&
      static_cast<std::size_t>(out.value) + 1 <= n) {
    out.certified = compare(log_auxiliary_f(n, out.value).ln, 0.0L, margin) == Verdict::holds;
  }
  return out;
}

std::size_t lmin_validity_threshold(std::size_t max_n, long double margin) {
  std::size_t n0 = max_n + 1;
  for (auto n = max_n; n >= 2; --n) {
    if (!lmin_lower_bound(n, margin).certified) break;
    n0 = n;
  }
  return n0;
}

Verdict sphere_covering_check(const BigInt& code_size, std::size_t n, int rt, long double margin) {
  if (rt < 1) throw DomainError("sphere_covering_check: requires rt >= 1");
  const auto whole = factorial(static_cast<unsigned>(n));
  try {
    const auto ball = ball_size_exact(n, rt - 1);
    return code_size * ball < whole ? Verdict::holds : Verdict::fails;
  } catch (const ResourceError&) {
  }
  const auto r = std::min<int>(rt - 1, static_cast<int>(n) - 1);
  const auto lhs = log_big(code_size) + ball_size_kloeve_bound(n, r).ln;
  return compare(lhs, log_factorial(n), margin) == Verdict::holds ? Verdict::holds : Verdict::inconclusive;
}

CodeSizeComparison mcyc_mid_inequality(std::size_t t, std::size_t m, long double margin) {
  if (t < 1 || m < 2) throw DomainError("mcyc_mid_inequality: requires t >= 1, m >= 2");
  const auto n = t * m;
  const auto r = static_cast<std::size_t>(radius_gn(m));
  CodeSizeComparison out;
  out.m_cyc = cardinality(ComposedCodeSpec::uniform(n, m, BlockKind::cyclic, BlockKind::cyclic));
  out.m_id = cardinality(ComposedCodeSpec::uniform(n, r + 1, BlockKind::identity, BlockKind::identity));
  out.lhs = {log_big(out.m_cyc) - log_big(out.m_id)};
  const auto lt = static_cast<long double>(t);
  const auto lm = static_cast<long double>(m);
  out.rhs = {(2.0L * lt + 2.0L) * std::log(2.0L) + 0.5L * std::log(lt) +
             lt * std::log(2.0L * std::numbers::pi_v<long double> * lt) +
             lt * (2.0L * std::log(lm) - std::sqrt(lm) + 2.0L)};
  out.verdict = compare(out.lhs.ln, out.rhs.ln, margin);
  return out;
}

}  // namespace permcover
