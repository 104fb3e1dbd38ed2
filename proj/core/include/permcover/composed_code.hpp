#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "permcover/code.hpp"
#include "permcover/integer_math.hpp"
#include "permcover/permutation.hpp"

namespace permcover {

enum class BlockKind { cyclic, identity, explicit_list };

std::string to_string(BlockKind kind);
/// Accepts "cyclic", "identity" and "explicit". Throws DomainError otherwise.
BlockKind block_kind_from_string(const std::string& text);

/// A building-block code on k points.
struct BlockSpec {
  BlockKind kind = BlockKind::cyclic;
  std::size_t k = 0;
  /// Codewords when kind == explicit_list; each of length k.
  ExplicitCode codewords;

  static BlockSpec cyclic(std::size_t k) { return {BlockKind::cyclic, k, {}}; }
  static BlockSpec identity(std::size_t k) { return {BlockKind::identity, k, {}}; }
  static BlockSpec explicit_list(ExplicitCode code);

  /// Number of codewords; a size-0 block holds only the empty permutation.
  BigInt cardinality() const;
  /// r(G_k) for cyclic, k-1 for the identity code, brute force for lists.
  int covering_radius() const;
  bool contains(const Permutation& p) const;
  /// All codewords; empty block yields {[]}.
  std::vector<Permutation> codewords_list() const;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// One value block I = [first, first + code.k - 1] with its code.
struct ValueBlock {
  Value first = 1;
  BlockSpec code;

  std::size_t size() const noexcept { return code.k; }
  Value last() const noexcept { return first + static_cast<Value>(code.k) - 1; }

  friend bool operator==(const ValueBlock&, const ValueBlock&) = default;
};

/// Value intervals I_i = [im+1, (i+1)m] cap [n] for i = 0..floor(n/m).
/// The last interval may be empty. Throws DomainError unless 1 <= m <= n.
std::vector<std::pair<Value, Value>> blocks(std::size_t n, std::size_t m);

/// A code whose codewords f satisfy f|^{I_i} in C_i for every value block.
///
/// Blocks are consecutive integer intervals partitioning [n], in increasing
/// order. A trailing empty block stands for the size-0 tail when m | n.
class ComposedCodeSpec {
 public:
  /// ⌊n/m⌋ head blocks of size m with `head` codes and one tail block of
  /// size n mod m.
  static ComposedCodeSpec uniform(std::size_t n, std::size_t m, BlockKind head, BlockKind tail);

  /// General contiguous partition. Throws DomainError unless the blocks
  /// tile [1, n] in order.
  ComposedCodeSpec(std::size_t n, std::size_t m, std::vector<ValueBlock> blocks);

  std::size_t length() const noexcept { return n_; }
  std::size_t block_size() const noexcept { return m_; }
  const std::vector<ValueBlock>& value_blocks() const noexcept { return blocks_; }
  const ValueBlock& tail() const noexcept { return blocks_.back(); }

  friend bool operator==(const ComposedCodeSpec&, const ComposedCodeSpec&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<ValueBlock> blocks_;
};

bool membership(const Permutation& f, const ComposedCodeSpec& spec);

/// n! / prod |I_i|! * prod |C_i|, exact.
BigInt cardinality(const ComposedCodeSpec& spec);

/// max over blocks of the block covering radius. This always bounds the
/// radius from above but is not always attained: with cyclic blocks the
/// codes (6,5), (7,5) and (8,5) have radius 2 against a value of 3.
int covering_radius(const ComposedCodeSpec& spec);

/// A codeword within covering_radius(spec) of f, blockwise: the positions
/// holding values of I_i, read in ascending order, carry f|^{I_i}; the block
/// codeword covering that projection is written back shifted into I_i.
/// Throws CapabilityError for explicit-list blocks.
Permutation cover_codeword_composed(const Permutation& f, const ComposedCodeSpec& spec);

/// Visits every codeword exactly once. Throws ResourceError when the
/// cardinality exceeds `cap`.
void enumerate(const ComposedCodeSpec& spec, const std::function<void(const Permutation&)>& visit,
               std::size_t cap = 10'000'000);

/// Collects `enumerate` into a code.
ExplicitCode enumerate_code(const ComposedCodeSpec& spec, std::size_t cap = 10'000'000);

/// log2(|C|) / n, from the exact cardinality.
long double rate(const ComposedCodeSpec& spec);

/// r / (n - 1). Throws DomainError for n <= 1.
long double normalized_radius(const ComposedCodeSpec& spec);

/// Replaces a cyclic tail by the identity code when (n mod m) - 1 <= r(G_m).
/// Other specs are returned unchanged.
ComposedCodeSpec tail_substitution(const ComposedCodeSpec& spec);

}  // namespace permcover
