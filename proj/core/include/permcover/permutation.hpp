#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permcover {

/// Element of [n]. All public indices and values are 1-based.
using Value = std::int32_t;

/// A permutation of [n] in one-line form, f = [f(1), ..., f(n)].
///
/// The empty permutation (n = 0) is a valid value. Instances are immutable
/// once constructed and always hold a bijection of [n].
class Permutation {
 public:
  Permutation() = default;

  /// Takes the one-line image [f(1), ..., f(n)]. Throws DomainError if the
  /// sequence is not a bijection of [n].
  explicit Permutation(std::vector<Value> one_line);

  static Permutation identity(std::size_t n);

  /// Builds a permutation of [n] from disjoint cycles; omitted points are
  /// fixed. Throws DomainError on repeated or out-of-range points.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Value>>& cycles);

  std::size_t size() const noexcept { return image_.size(); }
  bool empty() const noexcept { return image_.empty(); }

  /// f(i) for i in [n]. Unchecked.
  Value operator()(Value i) const noexcept { return image_[static_cast<std::size_t>(i - 1)]; }

  /// f(i) with bounds checking.
  Value at(Value i) const;

  std::span<const Value> one_line() const noexcept { return image_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Value> one_line) : image_(std::move(one_line)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation from_trusted_image(std::vector<Value>);

  std::vector<Value> image_;
};

/// Wraps an image already known to be a bijection. Skips validation; for
/// hot loops inside the library.
Permutation from_trusted_image(std::vector<Value> one_line);

/// (fg)(i) = f(g(i)). Throws DimensionError on length mismatch.
Permutation compose(const Permutation& f, const Permutation& g);

Permutation inverse(const Permutation& f);

/// max_i |f(i) - g(i)|. Throws DimensionError on length mismatch.
int linf_distance(const Permutation& f, const Permutation& g);

/// The unique r in [1, n] with n | (m - r).
std::int64_t mod_plus(std::int64_t m, std::int64_t n);

/// f|_I: keeps the entries of f at the positions in `positions` (processed in
/// ascending order) and renames them to [|I|] preserving relative order.
/// Throws DomainError on out-of-range or repeated positions.
Permutation project_positions(const Permutation& f, std::span<const Value> positions);

/// f|^I = (f^{-1}|_I)^{-1}: keeps the values of f lying in `values`, read
/// along ascending positions, renamed to [|I|].
Permutation project_values(const Permutation& f, std::span<const Value> values);

/// A cyclic interval [start, end] mod+ n, inclusive and wrapping.
struct CyclicInterval {
  Value n = 0;
  Value start = 1;
  Value end = 1;

  /// ((end - start) mod n) + 1
  Value cardinality() const noexcept;
  bool contains(Value v) const noexcept;
  /// Members in walk order start, start+1, ..., end (mod+ n).
  std::vector<Value> as_set() const;

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
};

/// Interval given as [lo, hi] on the integers, reduced mod+ n.
/// Requires 1 <= hi - lo + 1 <= n.
CyclicInterval make_cyclic_interval(std::int64_t lo, std::int64_t hi, Value n);

// Text forms. One-line is "[v1,...,vn]"; cycle form is "(a,b,c)(d,e)".
// Whitespace is ignored everywhere.

/// Parses either form. Cycle form needs `n`; one-line form checks `n` when
/// given. Throws ParseError carrying the offending offset.
Permutation parse_permutation(std::string_view text, std::optional<std::size_t> n = std::nullopt);

std::string format_one_line(const Permutation& f);

/// Disjoint-cycle form without fixed points; the identity formats as "()".
std::string format_cycles(const Permutation& f);

}  // namespace permcover
