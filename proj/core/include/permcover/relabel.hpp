#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "permcover/code.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

/// C^h = { h g h^{-1} : g in C }.
ExplicitCode conjugate(const ExplicitCode& code, const Permutation& h);

/// G_n^h = <(h(1), h(2), ..., h(n))>, built from the relabeled n-cycle.
ExplicitCode gn_relabeled(std::size_t n, const Permutation& h);

/// Largest covering radius over all relabelings of G_n:
/// n - ceil((sqrt(4n+1) - 1) / 2). Requires n >= 3.
int lmax_formula(std::size_t n);

struct LmaxWitness {
  Permutation h;   ///< the transposition (1,2)
  Permutation f0;  ///< exposed by every codeword of G_n^h at radius n-a-1
};

/// Witness for n = t(t+1), t >= 2: d(f0, G_n^h) >= lmax_formula(n).
/// Unconstrained slots of f0 take the unused values in ascending order.
/// Throws DomainError when n is not of that form.
LmaxWitness lmax_witness(std::size_t n);

/// Counts of conjugators h in S_n by the covering radius of G_n^h.
struct ScanHistogram {
  std::size_t n = 0;
  std::map<int, std::uint64_t> counts;

  std::uint64_t total() const;
  int lmin() const;
  int lmax() const;

  ScanHistogram& operator+=(const ScanHistogram& other);
  friend bool operator==(const ScanHistogram&, const ScanHistogram&) = default;
};

struct ScanOptions {
  unsigned jobs = 1;
  /// Largest n scanned without `long_run`.
  std::size_t cap = 8;
  bool long_run = false;
  /// Evaluate one representative per relabeled group instead of every h.
  bool use_symmetry = true;
  /// Partial histograms are written here after every chunk.
  std::optional<std::filesystem::path> checkpoint;
  /// Continue from `checkpoint` when it exists.
  bool resume = false;
  /// Representatives per checkpoint chunk.
  std::size_t chunk = 256;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

/// Exact covering radius of G_n^h for every h in S_n, aggregated.
///
/// With `use_symmetry`, conjugators are grouped by the canonical form of
/// their cycle word (h(1), ..., h(n)) up to rotation and reversal, which
/// determines the group; each class is evaluated once and weighted by the
/// number of h in it. Output does not depend on `jobs`.
///
/// Throws DomainError for n < 3 and ResourceError when n > cap without
/// `long_run`.
ScanHistogram scan_relabelings(std::size_t n, const ScanOptions& options = {});

/// Checkpoint file: a header line, "n <n>", "cursor <done> <total>", then
/// one "<radius> <count>" line per histogram entry.
struct ScanCheckpoint {
  ScanHistogram histogram;
  std::size_t cursor = 0;
  std::size_t total = 0;
};

void write_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& checkpoint);
/// Throws DomainError on malformed content.
ScanCheckpoint read_checkpoint(const std::filesystem::path& path);

/// The reflection j -> n - j on [n-1] with n fixed. Requires n >= 3.
Permutation dihedral_reflection(std::size_t n);

/// D_n generated by (1,2,...,n) and the reflection above; 2n elements.
ExplicitCode dihedral_dn(std::size_t n);

struct DihedralBounds {
  int lower = 0;
  int upper = 0;
};

/// Piecewise lower bound and upper bound on r(D_n), exact integer
/// arithmetic. Requires n >= 4.
DihedralBounds dihedral_bounds(std::size_t n);

}  // namespace permcover
