#pragma once

#include <cstddef>
#include <optional>

#include "permcover/code.hpp"
#include "permcover/integer_math.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

/// Brute-force ground truth. Nothing in here uses a closed-form radius.

struct OracleOptions {
  /// Largest length accepted by the factorial-time searches.
  std::size_t max_n = 10;
  /// Worker threads for covering_radius_bruteforce.
  unsigned jobs = 1;
};

/// min over codewords of the l-infinity distance. Throws DomainError for an
/// empty code and DimensionError on length mismatch.
int distance_to_code(const Permutation& f, const ExplicitCode& code);

/// A covering radius with a permutation attaining it.
struct RadiusCertificate {
  int radius = 0;
  Permutation witness;
  std::size_t code_size = 0;

  /// Recomputes the witness distance; true iff it equals `radius`.
  bool revalidate(const ExplicitCode& code) const;
};

/// Exact covering radius max_f min_g d(f, g).
///
/// Runs a depth-first search over S_n for each threshold t = n-2, n-3, ...
/// asking whether some f has d(f, g) > t for every codeword g; the first
/// threshold that succeeds gives radius t+1 and its f as witness. Values
/// that cannot expose any codeword at t are interchangeable and searched
/// once, and branches are cut when the unexposed codewords can no longer
/// be reached by the remaining positions and values.
///
/// Throws ResourceError if n > options.max_n.
RadiusCertificate covering_radius_bruteforce(const ExplicitCode& code, const OracleOptions& options = {});

/// Same quantity by plain lexicographic enumeration of S_n with a running
/// maximum. Exists to cross-check the pruned search on small n.
RadiusCertificate covering_radius_naive(const ExplicitCode& code, std::size_t max_n = 9);

/// Witness part of covering_radius_bruteforce.
Permutation max_distance_witness(const ExplicitCode& code, const OracleOptions& options = {});

/// Some f with d(f, g) > threshold for all codewords g, if one exists.
/// Single-threaded; used by relabeling scans.
std::optional<Permutation> find_exposed(const ExplicitCode& code, int threshold);

/// |B_{n,r}| = #{f in S_n : |f(i) - i| <= r for all i}.
///
/// Counts the permanent of the 0/1 band matrix with a sliding-window DP
/// over which of the 2r+1 values around the current position are used.
/// When the band is wider than `band_limit` bits it enumerates S_n instead
/// (n <= 10), and otherwise throws ResourceError.
BigInt ball_size_exact(std::size_t n, int r, unsigned band_limit = 24);

/// The window DP alone. Throws ResourceError when 2r+1 > band_limit.
BigInt ball_size_dp(std::size_t n, int r, unsigned band_limit = 24);

/// Enumeration of S_n around the identity. Throws ResourceError for n > 10.
BigInt ball_size_enumerate(std::size_t n, int r);

/// #{f : d(f, center) <= r} by enumeration; n <= 10.
BigInt ball_size_around(const Permutation& center, int r);

}  // namespace permcover
