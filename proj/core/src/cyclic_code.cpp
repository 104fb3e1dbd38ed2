#include "permcover/cyclic_code.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "permcover/errors.hpp"
#include "permcover/integer_math.hpp"

namespace permcover {

namespace {

std::uint64_t four_n_plus_one(std::size_t n) { return 4 * static_cast<std::uint64_t>(n) + 1; }

void require_at_least(std::size_t n, std::size_t floor, const char* op) {
  if (n < floor) {
    throw DomainError(std::string(op) + ": requires n >= " + std::to_string(floor) + ", got " +
                      std::to_string(n));
  }
}

// Codeword with c(anchor) = 1: c(p) = (p - anchor + 1) mod+ n.
std::vector<Value> anchored_image(std::size_t n, Value anchor) {
  std::vector<Value> image(n);
  const auto nn = static_cast<Value>(n);
  for (Value p = 1; p <= nn; ++p) {
    auto v = p - anchor + 1;
    if (v <= 0) v += nn;
    image[static_cast<std::size_t>(p - 1)] = v;
  }
  return image;
}

}  // namespace

CyclicGroupCode::CyclicGroupCode(std::size_t n) : n_(n) { require_at_least(n, 1, "G_n"); }

Permutation CyclicGroupCode::power(std::size_t k) const {
  const auto anchor = static_cast<Value>(mod_plus(1 - static_cast<std::int64_t>(k % n_),
                                                  static_cast<std::int64_t>(n_)));
  return codeword_with_anchor(anchor);
}

Permutation CyclicGroupCode::codeword_with_anchor(Value anchor) const {
  if (anchor < 1 || static_cast<std::size_t>(anchor) > n_) {
    throw DomainError("anchor outside [1,n]");
  }
  return from_trusted_image(anchored_image(n_, anchor));
}

bool CyclicGroupCode::contains(const Permutation& f) const {
  if (f.size() != n_) return false;
  const auto nn = static_cast<Value>(n_);
  const auto shift = f(1) - 1;
  for (Value p = 1; p <= nn; ++p) {
    auto expect = p + shift;
    if (expect > nn) expect -= nn;
    if (f(p) != expect) return false;
  }
  return true;
}

std::vector<Permutation> CyclicGroupCode::codewords() const {
  std::vector<Permutation> out;
  out.reserve(n_);
  for (std::size_t k = 0; k < n_; ++k) out.push_back(power(k));
  return out;
}

ExplicitCode CyclicGroupCode::to_explicit() const { return ExplicitCode(codewords()); }

CyclicGroupCode generate_gn(std::size_t n) { return CyclicGroupCode(n); }

int radius_gn(std::size_t n) {
  require_at_least(n, 1, "radius_gn");
  return static_cast<int>(static_cast<std::int64_t>(n) - floor_sqrt_expr(four_n_plus_one(n), 1, 2));
}

int radius_gn_upper(std::size_t n) {
  require_at_least(n, 3, "radius_gn_upper");
  return static_cast<int>(static_cast<std::int64_t>(n) - ceil_sqrt_expr(four_n_plus_one(n), -1, 2));
}

int radius_gn_lower(std::size_t n) {
  require_at_least(n, 3, "radius_gn_lower");
  return radius_gn(n);
}

ExposureRecord exposure_set(std::size_t n, int rt, Value i, Value j) {
  const auto nn = static_cast<std::int64_t>(n);
  if (rt < 0 || 2 * static_cast<std::int64_t>(rt) < nn - 2) {
    throw DomainError("exposure_set: requires rt >= n/2 - 1");
  }
  if (i < 1 || i > nn || j < 1 || j > nn) throw DomainError("exposure_set: i, j must lie in [n]");
  ExposureRecord rec{i, j, std::nullopt};
  if (j <= nn - rt - 1) {
    rec.interval = make_cyclic_interval(i + 1, i + nn - rt - j, static_cast<Value>(n));
  } else if (j >= rt + 2) {
    rec.interval = make_cyclic_interval(static_cast<std::int64_t>(i) - j + rt + 2, i,
                                        static_cast<Value>(n));
  }
  return rec;
}

ExposureEvidence is_exposed(const Permutation& f, int rt) {
  const auto n = f.size();
  ExposureEvidence ev;
  ev.covered_anchor.assign(n, false);
  if (n == 0) return ev;
  const auto nn = static_cast<std::int64_t>(n);
  if (rt >= 0 && 2 * static_cast<std::int64_t>(rt) >= nn - 2) {
    for (Value i = 1; i <= nn; ++i) {
      const auto rec = exposure_set(n, rt, i, f(i));
      if (!rec.interval) continue;
      for (auto v : rec.interval->as_set()) ev.covered_anchor[static_cast<std::size_t>(v - 1)] = true;
    }
  } else {
    for (Value anchor = 1; anchor <= nn; ++anchor) {
      const auto c = from_trusted_image(anchored_image(n, anchor));
      ev.covered_anchor[static_cast<std::size_t>(anchor - 1)] = linf_distance(f, c) > rt;
    }
  }
  ev.exposed = std::all_of(ev.covered_anchor.begin(), ev.covered_anchor.end(), [](bool b) { return b; });
  return ev;
}

std::vector<std::pair<Value, Value>> witness_f0_mappings(std::size_t n) {
  require_at_least(n, 3, "witness_f0");
  const auto nn = static_cast<std::int64_t>(n);
  const auto a = floor_sqrt_expr(four_n_plus_one(n), 1, 2);
  std::vector<std::pair<Value, Value>> out;
  auto place = [&](std::int64_t pos, std::int64_t value) {
    if (pos >= 1 && pos <= nn) out.emplace_back(static_cast<Value>(pos), static_cast<Value>(value));
  };
  // Top values n-a+1..n at the triangular positions.
  for (std::int64_t k = 1; k <= a; ++k) place(triangular(k), nn - a + k);
  // Bottom values a..1 mirrored from position a(a+1) - 1.
  for (std::int64_t l = 1; l <= a; ++l) place(2 * triangular(a) - 1 - triangular(l), a - l + 1);
  return out;
}

Permutation witness_f0(std::size_t n) {
  std::vector<Value> image(n, 0);
  std::vector<bool> used(n + 1, false);
  for (auto [pos, value] : witness_f0_mappings(n)) {
    image[static_cast<std::size_t>(pos - 1)] = value;
    used[static_cast<std::size_t>(value)] = true;
  }
  Value next = 1;
  for (auto& slot : image) {
    if (slot != 0) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    slot = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return Permutation(std::move(image));
}

Value cover_codeword_anchor(const Permutation& f) {
  const auto n = static_cast<std::int64_t>(f.size());
  if (n == 0) throw DomainError("cover_codeword: empty permutation");
  const auto a = floor_sqrt_expr(four_n_plus_one(f.size()), -1, 2);
  std::vector<char> marked(static_cast<std::size_t>(n), 0);
  auto mark = [&](std::int64_t j) {
    j %= n;
    if (j <= 0) j += n;
    marked[static_cast<std::size_t>(j - 1)] = 1;
  };
  for (std::int64_t i = 1; i <= n; ++i) {
    const std::int64_t v = f(static_cast<Value>(i));
    if (v <= a) {
      for (auto j = i + 1; j <= i + a - (v - 1); ++j) mark(j);
    } else if (v >= n - a + 1) {
      for (auto j = i - (a - (n - v)) + 1; j <= i; ++j) mark(j);
    }
  }
  const auto it = std::find(marked.begin(), marked.end(), 0);
  if (it == marked.end()) throw std::logic_error("cover_codeword: every anchor marked");
  return static_cast<Value>(it - marked.begin() + 1);
}

Permutation cover_codeword(const Permutation& f) {
  const auto anchor = cover_codeword_anchor(f);
  return from_trusted_image(anchored_image(f.size(), anchor));
}

}  // namespace permcover
