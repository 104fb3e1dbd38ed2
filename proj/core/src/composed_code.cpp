#include "permcover/composed_code.hpp"

#include <cmath>

#include "permcover/cyclic_code.hpp"
#include "permcover/errors.hpp"
#include "permcover/oracle.hpp"

namespace permcover {

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::cyclic:
      return "cyclic";
    case BlockKind::identity:
      return "identity";
    case BlockKind::explicit_list:
      return "explicit";
  }
  return "unknown";
}

BlockKind block_kind_from_string(const std::string& text) {
  if (text == "cyclic") return BlockKind::cyclic;
  if (text == "identity") return BlockKind::identity;
  if (text == "explicit") return BlockKind::explicit_list;
  throw DomainError("unknown block kind '" + text + "'");
}

BlockSpec BlockSpec::explicit_list(ExplicitCode code) {
  if (code.empty()) throw DomainError("explicit block code must be non-empty");
  const auto k = code.length();
  return {BlockKind::explicit_list, k, std::move(code)};
}

BigInt BlockSpec::cardinality() const {
  if (k == 0) return 1;
  switch (kind) {
    case BlockKind::cyclic:
      return BigInt{k};
    case BlockKind::identity:
      return 1;
    case BlockKind::explicit_list:
      return BigInt{codewords.size()};
  }
  return 0;
}

int BlockSpec::covering_radius() const {
  if (k <= 1) return 0;
  switch (kind) {
    case BlockKind::cyclic:
      return radius_gn(k);
    case BlockKind::identity:
      return static_cast<int>(k) - 1;
    case BlockKind::explicit_list:
      return covering_radius_bruteforce(codewords).radius;
  }
  return 0;
}

bool BlockSpec::contains(const Permutation& p) const {
  if (p.size() != k) return false;
  if (k == 0) return true;
  switch (kind) {
    case BlockKind::cyclic:
      return CyclicGroupCode(k).contains(p);
    case BlockKind::identity:
      return p.is_identity();
    case BlockKind::explicit_list:
      return codewords.contains(p);
  }
  return false;
}

std::vector<Permutation> BlockSpec::codewords_list() const {
  if (k == 0) return {Permutation{}};
  switch (kind) {
    case BlockKind::cyclic:
      return CyclicGroupCode(k).codewords();
    case BlockKind::identity:
      return {Permutation::identity(k)};
    case BlockKind::explicit_list:
      return codewords.codewords();
  }
  return {};
}

std::vector<std::pair<Value, Value>> blocks(std::size_t n, std::size_t m) {
  if (m < 1 || m > n) throw DomainError("blocks: requires 1 <= m <= n");
  std::vector<std::pair<Value, Value>> out;
  for (std::size_t i = 0; i <= n / m; ++i) {
    const auto lo = static_cast<Value>(i * m + 1);
    const auto hi = static_cast<Value>(std::min((i + 1) * m, n));
    out.emplace_back(lo, hi);  // hi < lo encodes the empty tail
  }
  return out;
}

ComposedCodeSpec ComposedCodeSpec::uniform(std::size_t n, std::size_t m, BlockKind head, BlockKind tail) {
  if (head == BlockKind::explicit_list || tail == BlockKind::explicit_list) {
    throw DomainError("uniform specs take cyclic or identity blocks");
  }
  std::vector<ValueBlock> out;
  for (auto [lo, hi] : blocks(n, m)) {
    const auto size = static_cast<std::size_t>(std::max(0, hi - lo + 1));
    const bool is_tail = static_cast<std::size_t>(lo) > (n / m) * m;
    const auto kind = is_tail ? tail : head;
    out.push_back({lo, BlockSpec{kind, size, {}}});
  }
  return ComposedCodeSpec(n, m, std::move(out));
}

ComposedCodeSpec::ComposedCodeSpec(std::size_t n, std::size_t m, std::vector<ValueBlock> value_blocks)
    : n_(n), m_(m), blocks_(std::move(value_blocks)) {
  if (blocks_.empty()) throw DomainError("composed code needs at least one block");
  Value next = 1;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& block = blocks_[b];
    if (block.first != next) throw DomainError("value blocks must be consecutive intervals starting at 1");
    if (block.size() == 0 && b + 1 != blocks_.size()) {
      throw DomainError("only the last value block may be empty");
    }
    if (block.code.kind == BlockKind::explicit_list && !block.code.codewords.empty() &&
        block.code.codewords.length() != block.size()) {
      throw DimensionError("explicit block code length differs from block size");
    }
    next = static_cast<Value>(block.first + static_cast<Value>(block.size()));
  }
  if (static_cast<std::size_t>(next - 1) != n_) throw DomainError("value blocks must cover [1,n]");
}

namespace {

// Block index of every value, 1-based values.
std::vector<std::size_t> block_of_value(const ComposedCodeSpec& spec) {
  std::vector<std::size_t> out(spec.length() + 1, 0);
  const auto& bl = spec.value_blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    for (Value v = bl[b].first; v <= bl[b].last(); ++v) out[static_cast<std::size_t>(v)] = b;
  }
  return out;
}

// For each block, the positions holding its values (ascending) and the
// projection f|^{I} read along those positions.
struct BlockView {
  std::vector<Value> positions;
  std::vector<Value> projected;
};

std::vector<BlockView> split_by_block(const Permutation& f, const ComposedCodeSpec& spec) {
  if (f.size() != spec.length()) throw DimensionError("permutation length differs from code length");
  const auto owner = block_of_value(spec);
  const auto& bl = spec.value_blocks();
  std::vector<BlockView> views(bl.size());
  for (std::size_t b = 0; b < bl.size(); ++b) {
    views[b].positions.reserve(bl[b].size());
    views[b].projected.reserve(bl[b].size());
  }
  for (Value p = 1; static_cast<std::size_t>(p) <= f.size(); ++p) {
    const auto v = f(p);
    const auto b = owner[static_cast<std::size_t>(v)];
    views[b].positions.push_back(p);
    views[b].projected.push_back(v - bl[b].first + 1);
  }
  return views;
}

}  // namespace

bool membership(const Permutation& f, const ComposedCodeSpec& spec) {
  const auto views = split_by_block(f, spec);
  const auto& bl = spec.value_blocks();
  for (std::size_t b = 0; b < bl.size(); ++b) {
    if (!bl[b].code.contains(from_trusted_image(views[b].projected))) return false;
  }
  return true;
}

BigInt cardinality(const ComposedCodeSpec& spec) {
  BigInt total = factorial(static_cast<unsigned>(spec.length()));
  for (const auto& block : spec.value_blocks()) {
    total /= factorial(static_cast<unsigned>(block.size()));
  }
  for (const auto& block : spec.value_blocks()) total *= block.code.cardinality();
  return total;
}

int covering_radius(const ComposedCodeSpec& spec) {
  int r = 0;
  for (const auto& block : spec.value_blocks()) r = std::max(r, block.code.covering_radius());
  return r;
}

Permutation cover_codeword_composed(const Permutation& f, const ComposedCodeSpec& spec) {
  const auto& bl = spec.value_blocks();
  for (const auto& block : bl) {
    if (block.code.kind == BlockKind::explicit_list && block.size() > 0) {
      throw CapabilityError("covering codewords need cyclic or identity blocks");
    }
  }
  const auto views = split_by_block(f, spec);
  std::vector<Value> image(f.size());
  for (std::size_t b = 0; b < bl.size(); ++b) {
    const auto k = static_cast<Value>(bl[b].size());
    if (k == 0) continue;
    const auto& view = views[b];
    const auto offset = bl[b].first - 1;
    if (bl[b].code.kind == BlockKind::cyclic) {
      const auto anchor = cover_codeword_anchor(from_trusted_image(view.projected));
      for (Value t = 1; t <= k; ++t) {
        auto q = t - anchor + 1;
        if (q <= 0) q += k;
        image[static_cast<std::size_t>(view.positions[static_cast<std::size_t>(t - 1)] - 1)] = offset + q;
      }
    } else {
      for (Value t = 1; t <= k; ++t) {
        image[static_cast<std::size_t>(view.positions[static_cast<std::size_t>(t - 1)] - 1)] = offset + t;
      }
    }
  }
  return from_trusted_image(std::move(image));
}

namespace {

class Enumerator {
 public:
  Enumerator(const ComposedCodeSpec& spec, const std::function<void(const Permutation&)>& visit)
      : spec_(spec), visit_(visit), image_(spec.length(), 0), taken_(spec.length(), false) {
    for (const auto& block : spec.value_blocks()) block_words_.push_back(block.code.codewords_list());
  }

  void run() { place_block(0); }

 private:
  void place_block(std::size_t b) {
    const auto& bl = spec_.value_blocks();
    if (b == bl.size()) {
      visit_(from_trusted_image(image_));
      return;
    }
    const auto k = bl[b].size();
    std::vector<Value> free;
    for (std::size_t p = 0; p < taken_.size(); ++p) {
      if (!taken_[p]) free.push_back(static_cast<Value>(p));
    }
    // Lexicographic k-subsets of the free positions.
    std::vector<std::size_t> pick(k);
    for (std::size_t t = 0; t < k; ++t) pick[t] = t;
    for (;;) {
      for (auto t : pick) taken_[static_cast<std::size_t>(free[t])] = true;
      for (const auto& q : block_words_[b]) {
        for (std::size_t t = 0; t < k; ++t) {
          image_[static_cast<std::size_t>(free[pick[t]])] = bl[b].first - 1 + q(static_cast<Value>(t + 1));
        }
        place_block(b + 1);
      }
      for (auto t : pick) taken_[static_cast<std::size_t>(free[t])] = false;
      // Advance the combination.
      std::size_t t = k;
      while (t > 0 && pick[t - 1] == free.size() - k + (t - 1)) --t;
      if (t == 0) break;
      ++pick[t - 1];
      for (auto u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
    }
  }

  const ComposedCodeSpec& spec_;
  const std::function<void(const Permutation&)>& visit_;
  std::vector<std::vector<Permutation>> block_words_;
  std::vector<Value> image_;
  std::vector<bool> taken_;
};

}  // namespace

void enumerate(const ComposedCodeSpec& spec, const std::function<void(const Permutation&)>& visit,
               std::size_t cap) {
  if (cardinality(spec) > cap) {
    throw ResourceError("code has more than " + std::to_string(cap) + " codewords");
  }
  Enumerator(spec, visit).run();
}

ExplicitCode enumerate_code(const ComposedCodeSpec& spec, std::size_t cap) {
  std::vector<Permutation> words;
  enumerate(spec, [&](const Permutation& g) { words.push_back(g); }, cap);
  return ExplicitCode(std::move(words));
}

long double rate(const ComposedCodeSpec& spec) {
  return log_big(cardinality(spec)) / std::log(2.0L) / static_cast<long double>(spec.length());
}

long double normalized_radius(const ComposedCodeSpec& spec) {
  if (spec.length() <= 1) throw DomainError("normalized radius needs n >= 2");
  return static_cast<long double>(covering_radius(spec)) / static_cast<long double>(spec.length() - 1);
}

ComposedCodeSpec tail_substitution(const ComposedCodeSpec& spec) {
  const auto& bl = spec.value_blocks();
  const auto& tail = bl.back();
  if (bl.size() < 2 || tail.size() == 0 || tail.code.kind != BlockKind::cyclic) return spec;
  const auto head_radius = bl.front().code.covering_radius();
  if (static_cast<int>(tail.size()) - 1 > head_radius) return spec;
  auto out = bl;
  out.back().code = BlockSpec::identity(tail.size());
  return ComposedCodeSpec(spec.length(), spec.block_size(), std::move(out));
}

}  // namespace permcover
