#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "CLI11.hpp"
#include "json.hpp"
#include "permcover/bounds.hpp"
#include "permcover/composed_code.hpp"
#include "permcover/cyclic_code.hpp"
#include "permcover/descriptor.hpp"
#include "permcover/errors.hpp"
#include "permcover/oracle.hpp"
#include "permcover/relabel.hpp"

#ifndef PERMCOVER_VERSION
#define PERMCOVER_VERSION "unknown"
#endif

namespace permcover::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kDefaultOracleCap = 12;
constexpr std::size_t kDefaultScanCap = 8;

// Raised when a guarantee the library promises turns out false.
class Violation : public Error {
 public:
  using Error::Error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::optional<Table> table;
  int exit_code = kExitOk;
  std::string violation;
};

struct Caps {
  std::size_t oracle = kDefaultOracleCap;
  std::size_t scan = kDefaultScanCap;
};

Caps read_caps() {
  Caps caps;
  const char* env = std::getenv("PERMCOVER_CAP_N");
  if (env == nullptr || *env == '\0') return caps;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("PERMCOVER_CAP_N must be a non-negative integer, got '" + std::string(text) + "'");
  }
  caps.oracle = value;
  caps.scan = value;
  return caps;
}

Json big_json(const BigInt& x) {
  if (x <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(x);
  return x.str();
}

std::string cell_text(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_aligned(std::ostream& out, const Table& table) {
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t c = 0; c < width.size(); ++c) width[c] = table.columns[c].size();
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell_text(row[c]).size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(cell_text(v));
    line(cells);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << csv_field(cells[c]);
    out << "\n";
  };
  line(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(v.is_null() ? "" : cell_text(v));
    line(cells);
  }
}

enum class Format { text, json, csv };

void emit(std::ostream& out, const Report& report, Format format, double seconds) {
  if (format == Format::json) {
    Json env;
    env["command"] = report.command;
    env["parameters"] = report.parameters;
    env["results"] = report.results;
    env["timing"] = Json{{"seconds", seconds}};
    env["version"] = PERMCOVER_VERSION;
    out << env.dump(2) << "\n";
    return;
  }
  if (format == Format::csv && report.table) {
    write_csv(out, *report.table);
    return;
  }
  for (const auto& [key, value] : report.results.items()) {
    if (value.is_structured()) continue;
    out << key << ": " << cell_text(value) << "\n";
  }
  if (report.table) write_aligned(out, *report.table);
}

// ---------------------------------------------------------------- inputs

struct RangeArg {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

RangeArg parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw DomainError("bad --n-range '" + text + "', expected a:b");
    }
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto v = number(text);
    return {v, v};
  }
  return {number(std::string_view(text).substr(0, colon)), number(std::string_view(text).substr(colon + 1))};
}

ExplicitCode read_code_file(const std::string& path, std::optional<std::size_t> n) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open code file " + path);
  std::vector<Permutation> words;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    words.push_back(parse_permutation(line, n));
  }
  if (words.empty()) throw DomainError("code file " + path + " holds no codewords");
  return ExplicitCode(std::move(words));
}

struct ComposedArgs {
  std::optional<std::size_t> m;
  std::string head = "cyclic";
  std::string tail = "cyclic";
  std::string spec_file;
  bool substitute_tail = false;
};

ComposedCodeSpec composed_spec(std::optional<std::size_t> n, const ComposedArgs& a) {
  std::size_t nn = 0;
  std::size_t m = 0;
  auto head = block_kind_from_string(a.head);
  auto tail = block_kind_from_string(a.tail);
  if (!a.spec_file.empty()) {
    std::ifstream in(a.spec_file);
    if (!in) throw DomainError("cannot open spec file " + a.spec_file);
    Json j;
    try {
      j = Json::parse(in);
      nn = j.at("n").get<std::size_t>();
      m = j.at("m").get<std::size_t>();
      if (j.contains("head_kind")) head = block_kind_from_string(j["head_kind"].get<std::string>());
      if (j.contains("tail_kind")) tail = block_kind_from_string(j["tail_kind"].get<std::string>());
    } catch (const Json::exception& e) {
      throw DomainError("bad spec file " + a.spec_file + ": " + e.what());
    }
  } else {
    if (!n || !a.m) throw DomainError("composed codes need --n and --m (or --spec)");
    nn = *n;
    m = *a.m;
  }
  auto spec = ComposedCodeSpec::uniform(nn, m, head, tail);
  return a.substitute_tail ? tail_substitution(spec) : spec;
}

Json composed_json(const ComposedCodeSpec& spec) {
  Json blocks = Json::array();
  for (const auto& b : spec.value_blocks()) {
    if (b.size() == 0) continue;
    blocks.push_back({{"first", b.first}, {"last", b.last()}, {"kind", to_string(b.code.kind)}});
  }
  return blocks;
}

std::size_t require_n(std::optional<std::size_t> n, const char* family) {
  if (!n) throw DomainError(std::string("--n is required for family ") + family);
  return *n;
}

RadiusCertificate run_oracle(const ExplicitCode& code, const Caps& caps) {
  if (code.length() > caps.oracle) {
    throw ResourceError("n = " + std::to_string(code.length()) + " exceeds the brute-force cap " +
                        std::to_string(caps.oracle) + " (set PERMCOVER_CAP_N to raise it)");
  }
  return covering_radius_bruteforce(code, OracleOptions{caps.oracle, 1});
}

void attach_oracle(Report& report, const RadiusCertificate& cert) {
  report.results["oracle"] = cert.radius;
  report.results["witness"] = format_one_line(cert.witness);
  report.results["code_size"] = cert.code_size;
}

// Largest rt for which n codewords provably leave S_n uncovered at rt-1.
int sphere_lower_bound(std::size_t n) {
  int best = 0;
  for (int rt = 1; rt + 1 <= static_cast<int>(n); ++rt) {
    Verdict v;
    if (n <= 10) {
      v = sphere_covering_check(BigInt(n), n, rt);
    } else {
      const auto lhs = std::log(static_cast<long double>(n)) + ball_size_kloeve_bound(n, rt - 1).ln;
      v = lhs < log_factorial(n) * (1.0L - kDefaultMargin) ? Verdict::holds : Verdict::inconclusive;
    }
    if (v != Verdict::holds) break;
    best = rt;
  }
  return best;
}

// ---------------------------------------------------------------- radius

struct RadiusArgs {
  std::string family = "gn";
  std::optional<std::size_t> n;
  std::string h;
  std::string file;
  bool oracle = false;
  ComposedArgs composed;
};

Report cmd_radius(const RadiusArgs& a, const Caps& caps) {
  Report r;
  r.command = "radius";
  r.parameters["family"] = a.family;
  if (a.n) r.parameters["n"] = *a.n;
  auto& res = r.results;

  std::optional<int> exact;
  std::optional<int> lower;
  std::optional<int> upper;
  CodeDescriptor code;
  if (a.family == "gn") {
    const auto n = require_n(a.n, "gn");
    if (n == 0) throw DomainError("n must be positive");
    std::optional<Permutation> h;
    if (!a.h.empty()) {
      h = parse_permutation(a.h, n);
      r.parameters["h"] = a.h;
    }
    code = CyclicFamily{n, h};
    res["code"] = describe(code);
    if (!h || n < 3) {
      exact = radius_gn(n);
      res["radius"] = *exact;
    } else {
      lower = sphere_lower_bound(n);
      upper = lmax_formula(n);
      res["lower"] = *lower;
      res["upper"] = *upper;
    }
  } else if (a.family == "dn") {
    const auto n = require_n(a.n, "dn");
    const auto b = dihedral_bounds(n);
    code = DihedralFamily{n};
    lower = b.lower;
    upper = b.upper;
    res["code"] = describe(code);
    res["lower"] = b.lower;
    res["upper"] = b.upper;
    if (b.lower == b.upper) res["radius"] = b.lower;
  } else if (a.family == "composed") {
    const auto spec = composed_spec(a.n, a.composed);
    code = spec;
    r.parameters["n"] = spec.length();
    r.parameters["m"] = spec.block_size();
    exact = covering_radius(spec);
    res["code"] = describe(code);
    res["radius"] = *exact;
    res["size"] = big_json(cardinality(spec));
    res["rate"] = static_cast<double>(rate(spec));
    if (spec.length() >= 2) res["normalized_radius"] = static_cast<double>(normalized_radius(spec));
    res["blocks"] = composed_json(spec);
  } else if (a.family == "explicit") {
    if (a.file.empty()) throw DomainError("family explicit needs --file");
    r.parameters["file"] = a.file;
    const auto words = read_code_file(a.file, a.n);
    code = words;
    res["code"] = describe(code);
    const auto cert = run_oracle(words, caps);
    res["radius"] = cert.radius;
    attach_oracle(r, cert);
    return r;
  } else {
    throw DomainError("unknown family '" + a.family + "'");
  }

  if (a.oracle) {
    r.parameters["oracle"] = true;
    if (code_length(code) > caps.oracle) {
      throw ResourceError("n = " + std::to_string(code_length(code)) + " exceeds the brute-force cap " +
                          std::to_string(caps.oracle) + " (set PERMCOVER_CAP_N to raise it)");
    }
    const auto cert = run_oracle(materialize(code), caps);
    attach_oracle(r, cert);
    const bool ok = exact ? cert.radius == *exact : (*lower <= cert.radius && cert.radius <= *upper);
    if (!ok) throw Violation("brute-force radius " + std::to_string(cert.radius) + " contradicts the closed form");
  }
  return r;
}

// ---------------------------------------------------------------- cover

struct CoverArgs {
  std::string family = "gn";
  std::optional<std::size_t> n;
  std::string f;
  std::string file;
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 1;
  ComposedArgs composed;
};

// A covering strategy for one family: a codeword for f and the radius it
// is guaranteed to achieve.
struct Coverer {
  std::size_t n = 0;
  std::string name;
  int threshold = 0;
  std::function<Permutation(const Permutation&)> cover;
};

Permutation nearest(const ExplicitCode& code, const Permutation& f) {
  const Permutation* best = nullptr;
  int best_d = 0;
  for (const auto& g : code) {
    const auto d = linf_distance(f, g);
    if (best == nullptr || d < best_d) {
      best = &g;
      best_d = d;
    }
  }
  return *best;
}

Coverer make_coverer(const CoverArgs& a, const Caps& caps, std::optional<std::size_t> n_hint) {
  Coverer c;
  if (a.family == "gn") {
    c.n = a.n ? *a.n : n_hint.value_or(0);
    if (c.n == 0) throw DomainError("--n is required for family gn");
    c.name = describe(CyclicFamily{c.n, std::nullopt});
    c.threshold = radius_gn(c.n);
    c.cover = [](const Permutation& f) { return cover_codeword(f); };
  } else if (a.family == "composed") {
    auto spec = composed_spec(a.n, a.composed);
    c.n = spec.length();
    c.name = describe(spec);
    c.threshold = covering_radius(spec);
    c.cover = [spec = std::move(spec)](const Permutation& f) { return cover_codeword_composed(f, spec); };
  } else if (a.family == "dn") {
    c.n = a.n ? *a.n : n_hint.value_or(0);
    if (c.n == 0) throw DomainError("--n is required for family dn");
    c.name = describe(DihedralFamily{c.n});
    c.threshold = dihedral_bounds(c.n).upper;
    c.cover = [code = dihedral_dn(c.n)](const Permutation& f) { return nearest(code, f); };
  } else if (a.family == "explicit") {
    if (a.file.empty()) throw DomainError("family explicit needs --file");
    auto code = read_code_file(a.file, a.n);
    c.n = code.length();
    c.name = describe(code);
    c.threshold = run_oracle(code, caps).radius;
    c.cover = [code = std::move(code)](const Permutation& f) { return nearest(code, f); };
  } else {
    throw DomainError("unknown family '" + a.family + "'");
  }
  return c;
}

Permutation random_permutation(std::size_t n, boost::random::mt19937_64& rng) {
  std::vector<Value> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<Value>(i + 1);
  for (std::size_t i = n; i > 1; --i) {
    boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(image[i - 1], image[pick(rng)]);
  }
  return from_trusted_image(std::move(image));
}

Report cmd_cover(const CoverArgs& a, const Caps& caps) {
  Report r;
  r.command = "cover";
  r.parameters["family"] = a.family;
  if (a.n) r.parameters["n"] = *a.n;

  if (a.trials) {
    if (!a.f.empty()) throw DomainError("--f and --random-trials are exclusive");
    const auto c = make_coverer(a, caps, std::nullopt);
    r.parameters["random_trials"] = *a.trials;
    r.parameters["seed"] = a.seed;
    boost::random::mt19937_64 rng(a.seed);
    std::uint64_t violations = 0;
    int worst = 0;
    for (std::uint64_t t = 0; t < *a.trials; ++t) {
      const auto f = random_permutation(c.n, rng);
      const auto d = linf_distance(f, c.cover(f));
      worst = std::max(worst, d);
      if (d > c.threshold) ++violations;
    }
    r.results["code"] = c.name;
    r.results["trials"] = *a.trials;
    r.results["max_distance"] = worst;
    r.results["threshold"] = c.threshold;
    r.results["violations"] = violations;
    if (violations > 0) {
      r.exit_code = kExitViolation;
      r.violation = std::to_string(violations) + " trials exceeded the covering radius";
    }
    return r;
  }

  if (a.f.empty()) throw DomainError("cover needs --f or --random-trials");
  r.parameters["f"] = a.f;
  std::optional<std::size_t> hint;
  if (!a.n && a.family != "composed") hint = parse_permutation(a.f).size();
  const auto c = make_coverer(a, caps, hint);
  const auto f = parse_permutation(a.f, c.n);
  const auto g = c.cover(f);
  const auto d = linf_distance(f, g);
  r.results["code"] = c.name;
  r.results["f"] = format_one_line(f);
  r.results["codeword"] = format_one_line(g);
  r.results["distance"] = d;
  r.results["threshold"] = c.threshold;
  r.results["within"] = d <= c.threshold;
  if (d > c.threshold) {
    r.exit_code = kExitViolation;
    r.violation = "distance exceeds the covering radius";
  }
  return r;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::size_t n = 0;
  unsigned jobs = 1;
  std::string checkpoint;
  bool resume = false;
  bool long_run = false;
  bool no_symmetry = false;
  bool progress = false;
};

Report cmd_scan(const ScanArgs& a, const Caps& caps, std::ostream& err) {
  Report r;
  r.command = "scan";
  r.parameters["n"] = a.n;
  r.parameters["jobs"] = a.jobs;
  if (!a.checkpoint.empty()) r.parameters["checkpoint"] = a.checkpoint;
  if (a.resume) r.parameters["resume"] = true;
  if (a.long_run) r.parameters["long_run"] = true;

  ScanOptions opts;
  opts.jobs = a.jobs;
  opts.cap = caps.scan;
  opts.long_run = a.long_run;
  opts.use_symmetry = !a.no_symmetry;
  opts.resume = a.resume;
  if (!a.checkpoint.empty()) opts.checkpoint = a.checkpoint;
  if (a.progress) {
    opts.progress = [&err](std::size_t done, std::size_t total) {
      err << "scan: " << done << "/" << total << " classes\n";
    };
  }
  const auto hist = scan_relabelings(a.n, opts);

  Json counts = Json::object();
  Table table{{"radius", "count"}, {}};
  for (const auto& [radius, count] : hist.counts) {
    counts[std::to_string(radius)] = count;
    table.rows.push_back({radius, count});
  }
  r.results["n"] = a.n;
  r.results["total"] = hist.total();
  r.results["lmin"] = hist.lmin();
  r.results["lmax"] = hist.lmax();
  r.results["lmax_formula"] = lmax_formula(a.n);
  r.results["histogram"] = counts;
  r.table = std::move(table);
  return r;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string which = "radii";
  std::string range;
  std::optional<std::size_t> n;
};

Table table_radii(const RangeArg& range, const Caps& caps, bool& violated) {
  Table t{{"n", "radius", "lower", "upper", "oracle"}, {}};
  for (auto n = std::max<std::size_t>(range.lo, 1); n <= range.hi; ++n) {
    const auto radius = radius_gn(n);
    std::vector<Json> row{n, radius, nullptr, nullptr, nullptr};
    if (n >= 3) {
      row[2] = radius_gn_lower(n);
      row[3] = radius_gn_upper(n);
    }
    if (n <= caps.oracle) {
      const auto o = covering_radius_bruteforce(CyclicGroupCode(n).to_explicit(), OracleOptions{caps.oracle, 1}).radius;
      row[4] = o;
      if (o != radius) violated = true;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_bounds(const RangeArg& range) {
  Table t{{"n", "radius", "lmax", "lmin_bound", "lmin_certified", "dn_lower", "dn_upper"}, {}};
  for (auto n = std::max<std::size_t>(range.lo, 2); n <= range.hi; ++n) {
    std::vector<Json> row{n, radius_gn(n), nullptr, nullptr, nullptr, nullptr, nullptr};
    if (n >= 3) row[2] = lmax_formula(n);
    const auto lmin = lmin_lower_bound(n);
    row[3] = lmin.value;
    row[4] = lmin.certified;
    if (n >= 4) {
      const auto d = dihedral_bounds(n);
      row[5] = d.lower;
      row[6] = d.upper;
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table table_balls(const RangeArg& range) {
  Table t{{"n", "r", "exact", "kloeve_bound"}, {}};
  for (auto n = std::max<std::size_t>(range.lo, 1); n <= range.hi; ++n) {
    for (int r = 0; r < static_cast<int>(n); ++r) {
      std::vector<Json> row{n, r, nullptr, nullptr};
      try {
        row[2] = big_json(ball_size_exact(n, r));
      } catch (const ResourceError&) {
      }
      const auto ln = ball_size_kloeve_bound(n, r).ln;
      std::ostringstream s;
      s << std::setprecision(6) << static_cast<double>(std::exp(ln));
      row[3] = s.str();
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

Table table_exposure(std::size_t n) {
  const auto rt = radius_gn(n) - 1;
  const auto nn = static_cast<Value>(n);
  Table t{{"mapping", "exposed_by", "A_set"}, {}};
  for (auto [i, j] : witness_f0_mappings(n)) {
    const auto rec = exposure_set(n, rt, i, j);
    std::vector<std::string> anchors;
    std::vector<Value> powers;
    if (rec.interval) {
      for (auto v : rec.interval->as_set()) {
        anchors.push_back(std::to_string(v));
        powers.push_back(static_cast<Value>(((1 - v) % nn + nn) % nn));
      }
    }
    std::sort(powers.begin(), powers.end());
    std::vector<std::string> names;
    for (auto k : powers) names.push_back("g^" + std::to_string(k));
    t.rows.push_back({std::to_string(i) + "->" + std::to_string(j), join(names, ","), "{" + join(anchors, ",") + "}"});
  }
  return t;
}

Report cmd_table(const TableArgs& a, const Caps& caps) {
  Report r;
  r.command = "table";
  r.parameters["which"] = a.which;
  auto range_or = [&](std::size_t lo, std::size_t hi) {
    if (a.range.empty()) return RangeArg{lo, hi};
    r.parameters["n_range"] = a.range;
    return parse_range(a.range);
  };
  Table t;
  bool violated = false;
  if (a.which == "radii") {
    t = table_radii(range_or(1, 12), caps, violated);
  } else if (a.which == "bounds") {
    t = table_bounds(range_or(4, 20));
  } else if (a.which == "balls") {
    t = table_balls(range_or(1, 8));
  } else if (a.which == "table1") {
    const auto n = a.n.value_or(7);
    r.parameters["n"] = n;
    t = table_exposure(n);
  } else {
    throw DomainError("unknown table '" + a.which + "'");
  }
  r.results["columns"] = t.columns;
  r.results["rows"] = Json::array();
  for (const auto& row : t.rows) r.results["rows"].push_back(row);
  r.table = std::move(t);
  if (violated) {
    r.exit_code = kExitViolation;
    r.violation = "brute-force radius differs from the closed form";
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Covering codes for permutations under the l-infinity metric", "permcover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PERMCOVER_VERSION);

  bool as_json = false;
  bool as_csv = false;

  RadiusArgs radius;
  auto* radius_cmd = app.add_subcommand("radius", "Covering radius of a code family");
  radius_cmd->add_option("--family", radius.family, "gn, dn, composed or explicit")
      ->check(CLI::IsMember({"gn", "dn", "composed", "explicit"}));
  radius_cmd->add_option("--n", radius.n, "Code length");
  radius_cmd->add_option("--m", radius.composed.m, "Block size for composed codes");
  radius_cmd->add_option("--head", radius.composed.head, "Head block kind (cyclic, identity)");
  radius_cmd->add_option("--tail", radius.composed.tail, "Tail block kind (cyclic, identity)");
  radius_cmd->add_option("--spec", radius.composed.spec_file, "Composed spec JSON {n, m, head_kind, tail_kind}");
  radius_cmd->add_flag("--substitute-tail", radius.composed.substitute_tail, "Use the identity tail when allowed");
  radius_cmd->set_help_flag("--help", "Print this help message and exit");
  radius_cmd->add_option("--h", radius.h, "Relabeling permutation for gn");
  radius_cmd->add_option("--file", radius.file, "Codeword list, one permutation per line");
  radius_cmd->add_flag("--oracle", radius.oracle, "Also run the brute-force search");
  radius_cmd->add_flag("--json", as_json, "Emit the JSON report");

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "Find a codeword within the covering radius");
  cover_cmd->add_option("--family", cover.family, "gn, dn, composed or explicit")
      ->check(CLI::IsMember({"gn", "dn", "composed", "explicit"}));
  cover_cmd->add_option("--n", cover.n, "Code length");
  cover_cmd->add_option("--m", cover.composed.m, "Block size for composed codes");
  cover_cmd->add_option("--head", cover.composed.head, "Head block kind");
  cover_cmd->add_option("--tail", cover.composed.tail, "Tail block kind");
  cover_cmd->add_option("--spec", cover.composed.spec_file, "Composed spec JSON");
  cover_cmd->add_flag("--substitute-tail", cover.composed.substitute_tail, "Use the identity tail when allowed");
  cover_cmd->add_option("--file", cover.file, "Codeword list for family explicit");
  cover_cmd->add_option("--f", cover.f, "Permutation to cover, one-line or cycle form");
  cover_cmd->add_option("--random-trials", cover.trials, "Cover this many random permutations");
  cover_cmd->add_option("--seed", cover.seed, "Seed for --random-trials");
  cover_cmd->add_flag("--json", as_json, "Emit the JSON report");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Covering radii of every relabeling of G_n");
  scan_cmd->add_option("--n", scan.n, "Code length")->required();
  scan_cmd->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  scan_cmd->add_option("--checkpoint", scan.checkpoint, "Checkpoint file written after every chunk");
  scan_cmd->add_flag("--resume", scan.resume, "Continue from the checkpoint");
  scan_cmd->add_flag("--long-run", scan.long_run, "Allow n above the scan cap");
  scan_cmd->add_flag("--no-symmetry", scan.no_symmetry, "Evaluate every conjugator separately");
  scan_cmd->add_flag("--progress", scan.progress, "Report progress on stderr");
  scan_cmd->add_flag("--json", as_json, "Emit the JSON report");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Reproduction tables");
  table_cmd->add_option("--which", table.which, "radii, bounds, balls or table1")
      ->check(CLI::IsMember({"radii", "bounds", "balls", "table1"}));
  table_cmd->add_option("--n-range", table.range, "Inclusive range a:b");
  table_cmd->add_option("--n", table.n, "Length for table1 (default 7)");
  table_cmd->add_flag("--csv", as_csv, "Emit CSV");
  table_cmd->add_flag("--json", as_json, "Emit the JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    const auto caps = read_caps();
    if (*radius_cmd) {
      report = cmd_radius(radius, caps);
    } else if (*cover_cmd) {
      report = cmd_cover(cover, caps);
    } else if (*scan_cmd) {
      report = cmd_scan(scan, caps, err);
    } else {
      report = cmd_table(table, caps);
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Violation& e) {
    err << "guarantee violated: " << e.what() << "\n";
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "guarantee violated: " << e.what() << "\n";
    return kExitViolation;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  const auto format = as_json ? Format::json : as_csv ? Format::csv : Format::text;
  emit(out, report, format, elapsed.count());
  if (report.exit_code == kExitViolation) err << "guarantee violated: " << report.violation << "\n";
  return report.exit_code;
}

}  // namespace permcover::cli
