#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permcover/code.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

/// The natural transitive cyclic group G_n = <(1,2,...,n)>.
///
/// Codewords are indexed two ways. The power k in [0, n-1] gives
/// g^k = [k+1, ..., n, 1, ..., k]. The anchor v = (g^k)^{-1}(1) in [1, n] is
/// the position holding the value 1; exposure sets are sets of anchors.
class CyclicGroupCode {
 public:
  /// Throws DomainError for n < 1.
  explicit CyclicGroupCode(std::size_t n);

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_; }

  /// g^k for k in [0, n-1].
  Permutation power(std::size_t k) const;

  /// The codeword c with c(anchor) = 1.
  Permutation codeword_with_anchor(Value anchor) const;

  /// O(n) membership test: f is a rotation of the identity.
  bool contains(const Permutation& f) const;

  /// All n codewords, g^0 first.
  std::vector<Permutation> codewords() const;

  ExplicitCode to_explicit() const;

 private:
  std::size_t n_;
};

CyclicGroupCode generate_gn(std::size_t n);

/// r(G_n) = n - floor((sqrt(4n+1) + 1) / 2), exact integer arithmetic.
int radius_gn(std::size_t n);

/// n - ceil((sqrt(4n+1) - 1) / 2). Requires n >= 3.
int radius_gn_upper(std::size_t n);

/// n - floor((sqrt(4n+1) + 1) / 2). Requires n >= 3.
int radius_gn_lower(std::size_t n);

/// Anchors of the codewords of G_n that expose the mapping i -> j at
/// radius `rt` (i.e. |j - c(i)| > rt). Empty interval when j lies in
/// neither the bottom range [1, n-rt-1] nor the top range [rt+2, n].
struct ExposureRecord {
  Value i = 0;
  Value j = 0;
  std::optional<CyclicInterval> interval;

  Value cardinality() const noexcept { return interval ? interval->cardinality() : 0; }
};

/// Closed-form exposure set. Requires 2*rt >= n - 2 and i, j in [n]; throws
/// DomainError otherwise.
ExposureRecord exposure_set(std::size_t n, int rt, Value i, Value j);

struct ExposureEvidence {
  bool exposed = false;
  /// covered_anchor[v-1] is true iff the codeword with anchor v exposes f.
  std::vector<bool> covered_anchor;
};

/// Whether d(f, G_n) > rt. Uses the interval union when 2*rt >= n - 2 and
/// falls back to direct distance evaluation below that.
ExposureEvidence is_exposed(const Permutation& f, int rt);

/// The lower-bound witness: a permutation at distance exactly r(G_n) from
/// G_n. Free slots are filled with the unused values in ascending order,
/// placed into the unused positions in ascending order. Requires n >= 3.
Permutation witness_f0(std::size_t n);

/// The entries of witness_f0(n) fixed by the construction, as (i, f0(i)):
/// top values first, then bottom values. Requires n >= 3.
std::vector<std::pair<Value, Value>> witness_f0_mappings(std::size_t n);

/// Linear-time covering codeword: returns g in G_n with d(f, g) <= r(G_n).
/// Picks the first anchor left unmarked by the exposure windows.
Permutation cover_codeword(const Permutation& f);

/// Anchor of the codeword `cover_codeword` would return; avoids building it.
Value cover_codeword_anchor(const Permutation& f);

}  // namespace permcover
