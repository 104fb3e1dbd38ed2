#include "permcover/relabel.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "permcover/cyclic_code.hpp"
#include "permcover/errors.hpp"
#include "permcover/integer_math.hpp"
#include "permcover/oracle.hpp"

namespace permcover {

ExplicitCode conjugate(const ExplicitCode& code, const Permutation& h) {
  if (!code.empty() && code.length() != h.size()) throw DimensionError("conjugate: length mismatch");
  const auto h_inv = inverse(h);
  std::vector<Permutation> out;
  out.reserve(code.size());
  for (const auto& g : code) out.push_back(compose(compose(h, g), h_inv));
  return ExplicitCode(std::move(out));
}

namespace {

// Powers of the n-cycle (w[0], w[1], ..., w[n-1]).
ExplicitCode cycle_group(const std::vector<Value>& word) {
  const auto n = word.size();
  std::vector<Value> gen(n);
  for (std::size_t k = 0; k < n; ++k) gen[static_cast<std::size_t>(word[k] - 1)] = word[(k + 1) % n];
  const auto c = from_trusted_image(gen);
  std::vector<Permutation> out;
  out.reserve(n);
  auto x = Permutation::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(x);
    x = compose(c, x);
  }
  return ExplicitCode(std::move(out));
}

// Least rotation/reversal of a cycle word, packed 4 bits per entry.
std::uint64_t canonical_cycle_word(const std::vector<Value>& word) {
  const auto n = word.size();
  const auto one = static_cast<std::size_t>(std::find(word.begin(), word.end(), 1) - word.begin());
  std::uint64_t forward = 0;
  std::uint64_t backward = 0;
  for (std::size_t k = 0; k < n; ++k) {
    forward = forward << 4 | static_cast<std::uint64_t>(word[(one + k) % n]);
    backward = backward << 4 | static_cast<std::uint64_t>(word[(one + n - k) % n]);
  }
  return std::min(forward, backward);
}

std::vector<Value> unpack_word(std::uint64_t packed, std::size_t n) {
  std::vector<Value> word(n);
  for (std::size_t k = n; k-- > 0;) {
    word[k] = static_cast<Value>(packed & 0xF);
    packed >>= 4;
  }
  return word;
}

int group_radius(const ExplicitCode& code) {
  return covering_radius_bruteforce(code, OracleOptions{code.length(), 1}).radius;
}

}  // namespace

ExplicitCode gn_relabeled(std::size_t n, const Permutation& h) {
  if (h.size() != n) throw DimensionError("gn_relabeled: length mismatch");
  if (n == 0) throw DomainError("gn_relabeled: n must be positive");
  return cycle_group(std::vector<Value>(h.one_line().begin(), h.one_line().end()));
}

int lmax_formula(std::size_t n) {
  if (n < 3) throw DomainError("lmax_formula: requires n >= 3");
  return radius_gn_upper(n);
}

LmaxWitness lmax_witness(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  if (!is_pronic(nn) || n < 6) throw DomainError("lmax_witness: requires n = t(t+1) with t >= 2");
  const auto a = static_cast<std::int64_t>(isqrt_floor(static_cast<std::uint64_t>(nn)));
  std::vector<Value> image(n, 0);
  std::vector<bool> used(n + 1, false);
  auto place = [&](std::int64_t pos, std::int64_t value) {
    image[static_cast<std::size_t>(pos - 1)] = static_cast<Value>(value);
    used[static_cast<std::size_t>(value)] = true;
  };
  place(1, 1);
  place(2, nn);
  place(3, nn - a + 1);
  for (std::int64_t k = 0; k <= a - 2; ++k) place(triangular(k) + a + 2, a - k);
  for (std::int64_t l = 1; l <= a - 2; ++l) place(nn - a + 2 - triangular(l), nn - a + 1 + l);
  Value next = 1;
  for (auto& slot : image) {
    if (slot != 0) continue;
    while (used[static_cast<std::size_t>(next)]) ++next;
    slot = next;
    used[static_cast<std::size_t>(next)] = true;
  }
  return {Permutation::from_cycles(n, {{1, 2}}), Permutation(std::move(image))};
}

std::uint64_t ScanHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

int ScanHistogram::lmin() const {
  if (counts.empty()) throw DomainError("empty histogram");
  return counts.begin()->first;
}

int ScanHistogram::lmax() const {
  if (counts.empty()) throw DomainError("empty histogram");
  return counts.rbegin()->first;
}

ScanHistogram& ScanHistogram::operator+=(const ScanHistogram& other) {
  for (const auto& [r, c] : other.counts) counts[r] += c;
  return *this;
}

void write_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& cp) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw DomainError("cannot write checkpoint " + tmp.string());
    out << "# permcover scan checkpoint\n";
    out << "n " << cp.histogram.n << "\n";
    out << "cursor " << cp.cursor << " " << cp.total << "\n";
    for (const auto& [r, c] : cp.histogram.counts) out << r << " " << c << "\n";
  }
  std::filesystem::rename(tmp, path);
}

ScanCheckpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read checkpoint " + path.string());
  ScanCheckpoint cp;
  bool have_n = false;
  bool have_cursor = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "n") {
      have_n = static_cast<bool>(fields >> cp.histogram.n);
    } else if (head == "cursor") {
      have_cursor = static_cast<bool>(fields >> cp.cursor >> cp.total);
    } else {
      std::istringstream pair(line);
      int radius = 0;
      std::uint64_t count = 0;
      if (!(pair >> radius >> count)) throw DomainError("malformed checkpoint line: " + line);
      cp.histogram.counts[radius] += count;
    }
  }
  if (!have_n || !have_cursor || cp.cursor > cp.total) throw DomainError("incomplete checkpoint " + path.string());
  return cp;
}

ScanHistogram scan_relabelings(std::size_t n, const ScanOptions& options) {
  if (n < 3) throw DomainError("scan_relabelings: requires n >= 3");
  if (n > 15) throw ResourceError("scan_relabelings: n > 15 is not supported");
  if (n > options.cap && !options.long_run) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds scan cap " + std::to_string(options.cap) +
                        " (enable the long-run mode)");
  }

  // Work items: one cycle word per class and the number of h in the class.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> items;
  {
    std::unordered_map<std::uint64_t, std::uint64_t> classes;
    std::vector<Value> word(n);
    std::iota(word.begin(), word.end(), Value{1});
    do {
      std::uint64_t key = 0;
      if (options.use_symmetry) {
        key = canonical_cycle_word(word);
      } else {
        for (auto v : word) key = key << 4 | static_cast<std::uint64_t>(v);
      }
      ++classes[key];
    } while (std::next_permutation(word.begin(), word.end()));
    items.assign(classes.begin(), classes.end());
    std::sort(items.begin(), items.end());
  }

  ScanCheckpoint state;
  state.histogram.n = n;
  state.total = items.size();
  if (options.checkpoint && options.resume && std::filesystem::exists(*options.checkpoint)) {
    auto loaded = read_checkpoint(*options.checkpoint);
    if (loaded.histogram.n != n || loaded.total != items.size()) {
      throw DomainError("checkpoint does not match this scan");
    }
    state = std::move(loaded);
  }

  const auto jobs = std::max(1u, options.jobs);
  const auto chunk = std::max<std::size_t>(1, options.chunk);
  std::vector<int> radii;
  while (state.cursor < items.size()) {
    const auto begin = state.cursor;
    const auto end = std::min(items.size(), begin + chunk);
    radii.assign(end - begin, 0);
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
      for (;;) {
        const auto k = next.fetch_add(1);
        if (k >= end) return;
        radii[k - begin] = group_radius(cycle_group(unpack_word(items[k].first, n)));
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto k = begin; k < end; ++k) state.histogram.counts[radii[k - begin]] += items[k].second;
    state.cursor = end;
    if (options.checkpoint) write_checkpoint(*options.checkpoint, state);
    if (options.progress) options.progress(state.cursor, state.total);
  }
  return state.histogram;
}

Permutation dihedral_reflection(std::size_t n) {
  if (n < 3) throw DomainError("dihedral group requires n >= 3");
  std::vector<Value> image(n);
  for (std::size_t j = 1; j < n; ++j) image[j - 1] = static_cast<Value>(n - j);
  image[n - 1] = static_cast<Value>(n);
  return Permutation(std::move(image));
}

ExplicitCode dihedral_dn(std::size_t n) {
  const auto reflection = dihedral_reflection(n);
  return generate_group(n, {CyclicGroupCode(n).power(1), reflection});
}

DihedralBounds dihedral_bounds(std::size_t n) {
  if (n < 4) throw DomainError("dihedral_bounds: requires n >= 4");
  const auto nn = static_cast<std::int64_t>(n);
  const auto un = static_cast<std::uint64_t>(n);
  std::int64_t lower = 0;
  if (n <= 9) {
    lower = nn - ceil_sqrt_expr(288 * un + 297, -3, 16);
  } else if (n <= 911) {
    lower = nn - ceil_sqrt_expr(288 * un + 737, -1, 16);
  } else {
    lower = nn - ceil_sqrt_expr(18 * un - 18, 0, 4);
  }
  return {static_cast<int>(lower), radius_gn(n)};
}

}  // namespace permcover
