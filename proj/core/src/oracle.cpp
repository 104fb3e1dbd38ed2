#include "permcover/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <vector>

#include "permcover/errors.hpp"

namespace permcover {

namespace {

using Word = std::uint64_t;

void require_nonempty(const ExplicitCode& code) {
  if (code.empty()) throw DomainError("empty code");
}

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw ResourceError("length " + std::to_string(n) + " exceeds brute-force cap " +
                        std::to_string(cap));
  }
}

// Depth-first search for a permutation that every codeword exposes at a
// fixed threshold. Positions are filled left to right. Values that no
// codeword can expose ("dead" values, a contiguous middle block) are placed
// in ascending order, so each subtree is explored for one ordering only.
class ExposureSearch {
 public:
  ExposureSearch(const ExplicitCode& code, int threshold)
      : n_(static_cast<int>(code.length())),
        m_(code.size()),
        words_((code.size() + 63) / 64),
        threshold_(threshold) {
    for (Value v = 1; v <= n_; ++v) {
      if (std::max(v - 1, n_ - v) > threshold_) {
        live_.push_back(v);
      } else {
        dead_.push_back(v);
      }
    }
    if (live_.size() > 64) throw ResourceError("exposure search supports at most 64 live values");
    // exposes_[(p * L + l) * W ...]: codewords g with |live_[l] - g(p)| > t.
    exposes_.assign(static_cast<std::size_t>(n_) * live_.size() * words_, 0);
    std::size_t g = 0;
    for (const auto& c : code) {
      for (int p = 0; p < n_; ++p) {
        for (std::size_t l = 0; l < live_.size(); ++l) {
          if (std::abs(live_[l] - c(p + 1)) > threshold_) {
            exposes_[(static_cast<std::size_t>(p) * live_.size() + l) * words_ + g / 64] |=
                Word{1} << (g % 64);
          }
        }
      }
      ++g;
    }
    unexposed_.assign(static_cast<std::size_t>(n_ + 1) * words_, 0);
    for (std::size_t k = 0; k < m_; ++k) unexposed_[k / 64] |= Word{1} << (k % 64);
    image_.assign(static_cast<std::size_t>(n_), 0);
    scratch_.assign(words_, 0);
    best_per_position_.assign(static_cast<std::size_t>(n_), 0);
  }

  // Choices for the first position, in search order. -1 stands for "the next
  // dead value"; otherwise an index into the live values.
  std::vector<int> root_choices() const { return choices_at(0, 0); }

  // Explores the subtree below `root_choice` (or the whole tree).
  // `stop` is polled so a sibling task that already succeeded can cancel.
  std::optional<Permutation> run(std::optional<int> root_choice,
                                 const std::function<bool()>& stop = {}) {
    stop_ = stop;
    nodes_ = 0;
    if (n_ == 0) return std::nullopt;
    if (root_choice) {
      if (!descend(0, 0, 0, *root_choice)) return std::nullopt;
      return finish();
    }
    if (search(0, 0, 0)) return finish();
    return std::nullopt;
  }

 private:
  std::vector<int> choices_at(std::uint64_t used_live, std::size_t dead_used) const {
    std::vector<int> out;
    const bool dead_left = dead_used < dead_.size();
    bool dead_emitted = false;
    for (std::size_t l = 0; l < live_.size(); ++l) {
      if (dead_left && !dead_emitted && !dead_.empty() && live_[l] > dead_[0]) {
        out.push_back(-1);
        dead_emitted = true;
      }
      if (!(used_live >> l & 1)) out.push_back(static_cast<int>(l));
    }
    if (dead_left && !dead_emitted) out.push_back(-1);
    return out;
  }

  Word* unexposed_at(int depth) { return unexposed_.data() + static_cast<std::size_t>(depth) * words_; }
  const Word* exposes(int p, std::size_t l) const {
    return exposes_.data() + (static_cast<std::size_t>(p) * live_.size() + l) * words_;
  }

  bool all_exposed(int depth) {
    const Word* u = unexposed_at(depth);
    for (std::size_t w = 0; w < words_; ++w) {
      if (u[w] != 0) return false;
    }
    return true;
  }

  // Whether the unexposed codewords at `depth` can still all be exposed by
  // the remaining positions and unused live values.
  bool feasible(int depth, std::uint64_t used_live) {
    const Word* u = unexposed_at(depth);
    std::size_t need = 0;
    for (std::size_t w = 0; w < words_; ++w) need += static_cast<std::size_t>(std::popcount(u[w]));
    std::fill(scratch_.begin(), scratch_.end(), 0);
    std::fill(best_per_position_.begin() + depth, best_per_position_.end(), 0);
    std::size_t value_sum = 0;
    for (std::size_t l = 0; l < live_.size(); ++l) {
      if (used_live >> l & 1) continue;
      std::size_t best_here = 0;
      for (int p = depth; p < n_; ++p) {
        const Word* e = exposes(p, l);
        std::size_t pc = 0;
        for (std::size_t w = 0; w < words_; ++w) {
          const auto x = e[w] & u[w];
          scratch_[w] |= x;
          pc += static_cast<std::size_t>(std::popcount(x));
        }
        best_here = std::max(best_here, pc);
        auto& bp = best_per_position_[static_cast<std::size_t>(p)];
        bp = std::max(bp, pc);
      }
      value_sum += best_here;
    }
    for (std::size_t w = 0; w < words_; ++w) {
      if ((u[w] & ~scratch_[w]) != 0) return false;
    }
    if (value_sum < need) return false;
    std::size_t position_sum = 0;
    for (int p = depth; p < n_; ++p) position_sum += best_per_position_[static_cast<std::size_t>(p)];
    return position_sum >= need;
  }

  // Assigns `choice` at position `depth` and searches below it.
  bool descend(int depth, std::uint64_t used_live, std::size_t dead_used, int choice) {
    const Word* u = unexposed_at(depth);
    Word* next = unexposed_at(depth + 1);
    if (choice < 0) {
      image_[static_cast<std::size_t>(depth)] = dead_[dead_used];
      std::copy(u, u + words_, next);
      return search(depth + 1, used_live, dead_used + 1);
    }
    const auto l = static_cast<std::size_t>(choice);
    image_[static_cast<std::size_t>(depth)] = live_[l];
    const Word* e = exposes(depth, l);
    for (std::size_t w = 0; w < words_; ++w) next[w] = u[w] & ~e[w];
    return search(depth + 1, used_live | (std::uint64_t{1} << l), dead_used);
  }

  bool search(int depth, std::uint64_t used_live, std::size_t dead_used) {
    if ((++nodes_ & 0xFFF) == 0 && stop_ && stop_()) return false;
    if (all_exposed(depth)) {
      filled_ = depth;
      return true;
    }
    if (depth == n_ || !feasible(depth, used_live)) return false;
    for (int choice : choices_at(used_live, dead_used)) {
      if (descend(depth, used_live, dead_used, choice)) return true;
    }
    return false;
  }

  // Completes the found prefix with the unused values in ascending order.
  Permutation finish() {
    std::vector<bool> used(static_cast<std::size_t>(n_) + 1, false);
    for (int p = 0; p < filled_; ++p) used[static_cast<std::size_t>(image_[static_cast<std::size_t>(p)])] = true;
    std::vector<Value> out(image_.begin(), image_.begin() + filled_);
    for (Value v = 1; v <= n_; ++v) {
      if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return Permutation(std::move(out));
  }

  int n_;
  std::size_t m_;
  std::size_t words_;
  int threshold_;
  std::vector<Value> live_;
  std::vector<Value> dead_;
  std::vector<Word> exposes_;
  std::vector<Word> unexposed_;
  std::vector<Word> scratch_;
  std::vector<std::size_t> best_per_position_;
  std::vector<Value> image_;
  int filled_ = 0;
  std::uint64_t nodes_ = 0;
  std::function<bool()> stop_;
};

// Runs one threshold, splitting the first position across workers. Returns
// the witness from the earliest root choice that has one.
std::optional<Permutation> find_exposed_parallel(const ExplicitCode& code, int threshold, unsigned jobs) {
  if (jobs <= 1) return ExposureSearch(code, threshold).run(std::nullopt);
  const auto roots = ExposureSearch(code, threshold).root_choices();
  std::vector<std::optional<Permutation>> found(roots.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{roots.size()};
  auto worker = [&] {
    ExposureSearch search(code, threshold);
    for (;;) {
      const auto task = next.fetch_add(1);
      if (task >= roots.size() || task > first_hit.load()) return;
      auto result = search.run(roots[task], [&] { return first_hit.load() < task; });
      if (result) {
        found[task] = std::move(result);
        auto seen = first_hit.load();
        while (task < seen && !first_hit.compare_exchange_weak(seen, task)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  const auto hit = first_hit.load();
  if (hit < roots.size()) return found[hit];
  return std::nullopt;
}

}  // namespace

int distance_to_code(const Permutation& f, const ExplicitCode& code) {
  require_nonempty(code);
  int best = std::numeric_limits<int>::max();
  for (const auto& g : code) {
    best = std::min(best, linf_distance(f, g));
    if (best == 0) break;
  }
  return best;
}

bool RadiusCertificate::revalidate(const ExplicitCode& code) const {
  return code.size() == code_size && distance_to_code(witness, code) == radius;
}

std::optional<Permutation> find_exposed(const ExplicitCode& code, int threshold) {
  require_nonempty(code);
  return ExposureSearch(code, threshold).run(std::nullopt);
}

RadiusCertificate covering_radius_bruteforce(const ExplicitCode& code, const OracleOptions& options) {
  require_nonempty(code);
  const auto n = code.length();
  require_cap(n, options.max_n);
  const auto jobs = std::max(1u, options.jobs);
  for (int t = static_cast<int>(n) - 2; t >= 0; --t) {
    if (auto f = find_exposed_parallel(code, t, jobs)) {
      return RadiusCertificate{t + 1, std::move(*f), code.size()};
    }
  }
  // Every permutation is a codeword.
  return RadiusCertificate{0, code.codewords().front(), code.size()};
}

RadiusCertificate covering_radius_naive(const ExplicitCode& code, std::size_t max_n) {
  require_nonempty(code);
  const auto n = code.length();
  require_cap(n, max_n);
  std::vector<Value> f(n);
  std::iota(f.begin(), f.end(), Value{1});
  int best = -1;
  std::vector<Value> witness;
  do {
    // Only f with d(f, g) > best for all g can raise the maximum.
    int dist = std::numeric_limits<int>::max();
    for (const auto& g : code) {
      int d = 0;
      for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(f[k] - g.one_line()[k]));
      dist = std::min(dist, d);
      if (dist <= best) break;
    }
    if (dist > best) {
      best = dist;
      witness = f;
    }
  } while (std::next_permutation(f.begin(), f.end()));
  return RadiusCertificate{best, Permutation(std::move(witness)), code.size()};
}

Permutation max_distance_witness(const ExplicitCode& code, const OracleOptions& options) {
  return covering_radius_bruteforce(code, options).witness;
}

BigInt ball_size_dp(std::size_t n, int r, unsigned band_limit) {
  if (r < 0) throw DomainError("ball radius must be non-negative");
  if (n == 0) return 1;
  const int w = std::min<int>(r, static_cast<int>(n) - 1);
  const auto width = static_cast<unsigned>(2 * w + 1);
  if (width > band_limit || width > 31) {
    throw ResourceError("band width " + std::to_string(width) + " exceeds limit " +
                        std::to_string(band_limit));
  }
  const auto nn = static_cast<int>(n);
  // Bit b of a state is value (i - w + b) at position i; values below 1 are
  // pre-marked as used.
  std::unordered_map<std::uint32_t, BigInt> states;
  states.emplace((std::uint32_t{1} << w) - 1, BigInt{1});
  for (int i = 1; i <= nn; ++i) {
    std::unordered_map<std::uint32_t, BigInt> next;
    next.reserve(states.size() * 2);
    for (const auto& [mask, count] : states) {
      for (int b = 0; b < static_cast<int>(width); ++b) {
        const int v = i - w + b;
        if (v < 1 || v > nn || (mask >> b & 1)) continue;
        const auto placed = mask | (std::uint32_t{1} << b);
        // Value i - w cannot be placed at a later position.
        if (!(placed & 1)) continue;
        next[placed >> 1] += count;
      }
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [mask, count] : states) total += count;
  return total;
}

BigInt ball_size_around(const Permutation& center, int r) {
  const auto n = center.size();
  require_cap(n, 10);
  std::vector<Value> f(n);
  std::iota(f.begin(), f.end(), Value{1});
  std::uint64_t count = 0;
  do {
    bool inside = true;
    for (std::size_t k = 0; k < n && inside; ++k) inside = std::abs(f[k] - center.one_line()[k]) <= r;
    count += inside ? 1 : 0;
  } while (std::next_permutation(f.begin(), f.end()));
  return BigInt{count};
}

BigInt ball_size_enumerate(std::size_t n, int r) {
  return ball_size_around(Permutation::identity(n), r);
}

BigInt ball_size_exact(std::size_t n, int r, unsigned band_limit) {
  if (r < 0) throw DomainError("ball radius must be non-negative");
  const int w = n == 0 ? 0 : std::min<int>(r, static_cast<int>(n) - 1);
  if (static_cast<unsigned>(2 * w + 1) <= band_limit) return ball_size_dp(n, r, band_limit);
  if (n <= 10) return ball_size_enumerate(n, r);
  throw ResourceError("band width " + std::to_string(2 * w + 1) + " exceeds limit " +
                      std::to_string(band_limit) + " and n > 10");
}

}  // namespace permcover
