#include "permcover/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

#include "permcover/errors.hpp"

namespace permcover {

namespace {

void require_same_size(const Permutation& f, const Permutation& g, const char* op) {
  if (f.size() != g.size()) {
    throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(f.size()) +
                         " vs " + std::to_string(g.size()) + ")");
  }
}

// Sorted copy of a 1-based index set; rejects duplicates and out-of-range.
std::vector<Value> checked_index_set(std::span<const Value> set, std::size_t n, const char* what) {
  std::vector<Value> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] < 1 || static_cast<std::size_t>(sorted[k]) > n) {
      throw DomainError(std::string(what) + " " + std::to_string(sorted[k]) + " outside [1," +
                        std::to_string(n) + "]");
    }
    if (k > 0 && sorted[k] == sorted[k - 1]) {
      throw DomainError(std::string("repeated ") + what + " " + std::to_string(sorted[k]));
    }
  }
  return sorted;
}

}  // namespace

Permutation::Permutation(std::vector<Value> one_line) : image_(std::move(one_line)) {
  const auto n = image_.size();
  std::vector<bool> seen(n + 1, false);
  for (auto v : image_) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw DomainError("value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw DomainError("repeated value " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Value> image(n);
  std::iota(image.begin(), image.end(), Value{1});
  return Permutation(Unchecked{}, std::move(image));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Value>>& cycles) {
  std::vector<Value> image(n);
  std::iota(image.begin(), image.end(), Value{1});
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (auto v : cycle) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw DomainError("cycle point " + std::to_string(v) + " outside [1," +
                          std::to_string(n) + "]");
      }
      if (used[static_cast<std::size_t>(v)]) {
        throw DomainError("cycle point " + std::to_string(v) + " repeated");
      }
      used[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      image[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(Unchecked{}, std::move(image));
}

Value Permutation::at(Value i) const {
  if (i < 1 || static_cast<std::size_t>(i) > image_.size()) {
    throw DomainError("position " + std::to_string(i) + " outside [1," +
                      std::to_string(image_.size()) + "]");
  }
  return (*this)(i);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < image_.size(); ++k) {
    if (image_[k] != static_cast<Value>(k + 1)) return false;
  }
  return true;
}

Permutation from_trusted_image(std::vector<Value> one_line) {
  return Permutation(Permutation::Unchecked{}, std::move(one_line));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  require_same_size(f, g, "compose");
  std::vector<Value> image(f.size());
  for (std::size_t k = 0; k < image.size(); ++k) image[k] = f(g.image_[k]);
  return Permutation(Permutation::Unchecked{}, std::move(image));
}

Permutation inverse(const Permutation& f) {
  std::vector<Value> image(f.size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    image[static_cast<std::size_t>(f.image_[k] - 1)] = static_cast<Value>(k + 1);
  }
  return Permutation(Permutation::Unchecked{}, std::move(image));
}

int linf_distance(const Permutation& f, const Permutation& g) {
  require_same_size(f, g, "linf_distance");
  const auto a = f.one_line();
  const auto b = g.one_line();
  int d = 0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

std::int64_t mod_plus(std::int64_t m, std::int64_t n) {
  if (n <= 0) throw DomainError("mod_plus: modulus must be positive");
  auto r = m % n;
  if (r <= 0) r += n;
  return r;
}

Permutation project_positions(const Permutation& f, std::span<const Value> positions) {
  const auto sorted = checked_index_set(positions, f.size(), "position");
  // Rank the selected entries; equal values cannot occur in a permutation.
  std::vector<Value> entries;
  entries.reserve(sorted.size());
  for (auto i : sorted) entries.push_back(f(i));
  std::vector<Value> order(entries.size());
  std::iota(order.begin(), order.end(), Value{0});
  std::sort(order.begin(), order.end(), [&](Value x, Value y) { return entries[x] < entries[y]; });
  std::vector<Value> image(entries.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    image[static_cast<std::size_t>(order[rank])] = static_cast<Value>(rank + 1);
  }
  return from_trusted_image(std::move(image));
}

Permutation project_values(const Permutation& f, std::span<const Value> values) {
  return inverse(project_positions(inverse(f), values));
}

Value CyclicInterval::cardinality() const noexcept {
  return static_cast<Value>(((end - start) % n + n) % n) + 1;
}

bool CyclicInterval::contains(Value v) const noexcept {
  if (v < 1 || v > n) return false;
  return ((v - start) % n + n) % n < cardinality();
}

std::vector<Value> CyclicInterval::as_set() const {
  std::vector<Value> out;
  const auto size = cardinality();
  out.reserve(static_cast<std::size_t>(size));
  for (Value k = 0; k < size; ++k) out.push_back(static_cast<Value>(mod_plus(start + k, n)));
  return out;
}

CyclicInterval make_cyclic_interval(std::int64_t lo, std::int64_t hi, Value n) {
  if (hi < lo || hi - lo + 1 > n) {
    throw DomainError("cyclic interval [" + std::to_string(lo) + "," + std::to_string(hi) +
                      "] does not fit modulus " + std::to_string(n));
  }
  return CyclicInterval{n, static_cast<Value>(mod_plus(lo, n)), static_cast<Value>(mod_plus(hi, n))};
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  // Returns the number and the offset it started at.
  std::pair<Value, std::size_t> number() {
    skip_ws();
    const auto start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 100'000'000) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", start);
    return {static_cast<Value>(v), start};
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Permutation parse_one_line(Scanner& in, std::optional<std::size_t> n) {
  in.expect('[');
  std::vector<std::pair<Value, std::size_t>> items;
  if (!in.accept(']')) {
    do {
      items.push_back(in.number());
    } while (in.accept(','));
    in.expect(']');
  }
  if (!in.done()) throw ParseError("trailing characters", in.pos());
  const auto size = items.size();
  if (n && *n != size) {
    throw ParseError("expected " + std::to_string(*n) + " entries, found " + std::to_string(size),
                     0);
  }
  std::vector<bool> seen(size + 1, false);
  std::vector<Value> image;
  image.reserve(size);
  for (auto [v, at] : items) {
    if (v < 1 || static_cast<std::size_t>(v) > size) {
      throw ParseError("value " + std::to_string(v) + " outside [1," + std::to_string(size) + "]",
                       at);
    }
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("repeated value " + std::to_string(v), at);
    seen[static_cast<std::size_t>(v)] = true;
    image.push_back(v);
  }
  return from_trusted_image(std::move(image));
}

Permutation parse_cycles(Scanner& in, std::size_t n) {
  std::vector<Value> image(n);
  std::iota(image.begin(), image.end(), Value{1});
  std::vector<bool> used(n + 1, false);
  while (!in.done()) {
    in.expect('(');
    std::vector<Value> cycle;
    if (!in.accept(')')) {
      do {
        auto [v, at] = in.number();
        if (v < 1 || static_cast<std::size_t>(v) > n) {
          throw ParseError("point " + std::to_string(v) + " outside [1," + std::to_string(n) + "]",
                           at);
        }
        if (used[static_cast<std::size_t>(v)]) {
          throw ParseError("repeated point " + std::to_string(v), at);
        }
        used[static_cast<std::size_t>(v)] = true;
        cycle.push_back(v);
      } while (in.accept(','));
      in.expect(')');
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      image[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return from_trusted_image(std::move(image));
}

}  // namespace

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> n) {
  Scanner in(text);
  switch (in.peek()) {
    case '[':
      return parse_one_line(in, n);
    case '(':
      if (!n) throw ParseError("cycle notation needs an explicit length", in.pos());
      return parse_cycles(in, *n);
    default:
      throw ParseError("expected '[' or '('", in.pos());
  }
}

std::string format_one_line(const Permutation& f) {
  std::string out = "[";
  bool first = true;
  for (auto v : f.one_line()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += ']';
  return out;
}

std::string format_cycles(const Permutation& f) {
  std::string out;
  std::vector<bool> visited(f.size() + 1, false);
  for (Value start = 1; static_cast<std::size_t>(start) <= f.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)] || f(start) == start) continue;
    out += '(';
    Value v = start;
    bool first = true;
    while (!visited[static_cast<std::size_t>(v)]) {
      visited[static_cast<std::size_t>(v)] = true;
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
      v = f(v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace permcover
