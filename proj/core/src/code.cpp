#include "permcover/code.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "permcover/errors.hpp"

namespace permcover {

ExplicitCode::ExplicitCode(std::vector<Permutation> codewords) : codewords_(std::move(codewords)) {
  if (!codewords_.empty()) length_ = codewords_.front().size();
  for (const auto& c : codewords_) {
    if (c.size() != length_) throw DimensionError("codewords of different lengths");
  }
  std::sort(codewords_.begin(), codewords_.end());
  codewords_.erase(std::unique(codewords_.begin(), codewords_.end()), codewords_.end());
}

bool ExplicitCode::contains(const Permutation& f) const {
  return std::binary_search(codewords_.begin(), codewords_.end(), f);
}

ExplicitCode generate_group(std::size_t length, const std::vector<Permutation>& generators) {
  for (const auto& g : generators) {
    if (g.size() != length) throw DimensionError("generator length mismatch");
  }
  std::set<Permutation> seen{Permutation::identity(length)};
  std::deque<Permutation> frontier{Permutation::identity(length)};
  while (!frontier.empty()) {
    const auto x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      auto y = compose(g, x);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return ExplicitCode(std::vector<Permutation>(seen.begin(), seen.end()));
}

}  // namespace permcover
