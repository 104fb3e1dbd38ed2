#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "permcover/permutation.hpp"

namespace permcover {

/// A code given by its full list of codewords, all of the same length.
class ExplicitCode {
 public:
  ExplicitCode() = default;
  /// Throws DimensionError if codeword lengths differ. Duplicates are removed
  /// and the codewords kept in lexicographic order.
  explicit ExplicitCode(std::vector<Permutation> codewords);

  /// Length n of the codewords (0 for the empty code).
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return codewords_.size(); }
  bool empty() const noexcept { return codewords_.empty(); }

  const std::vector<Permutation>& codewords() const noexcept { return codewords_; }
  bool contains(const Permutation& f) const;

  auto begin() const noexcept { return codewords_.begin(); }
  auto end() const noexcept { return codewords_.end(); }

  friend bool operator==(const ExplicitCode&, const ExplicitCode&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<Permutation> codewords_;
};

/// Closure of a generator set under composition. Throws DimensionError on
/// mixed lengths; `length` is used when `generators` is empty.
ExplicitCode generate_group(std::size_t length, const std::vector<Permutation>& generators);

}  // namespace permcover
