#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixrec/errors.hpp"
#include "mixrec/families.hpp"
#include "mixrec/identities.hpp"
#include "mixrec/interlace.hpp"
#include "mixrec/precision.hpp"
#include "mixrec/roots.hpp"

namespace mixrec::cli {

using json = nlohmann::ordered_json;

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams:
    case ErrorKind::SingularParams:
    case ErrorKind::ConstraintViolation:
    case ErrorKind::SizeMismatch: return 2;
    case ErrorKind::ConvergenceFailure: return 3;
    case ErrorKind::DegenerateU: return 4;
    default: return 1;
  }
}

struct Settings {
  PrecisionConfig precision;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  std::string output;
  std::string format;
  bool no_timestamp = false;
};

// ---------------------------------------------------------------------------
// Argument parsing helpers

/// Decimal literal or a multiple/fraction of pi: "pi", "-pi/2", "3*pi/4", "2pi".
inline real parse_real(const std::string& text) {
  static const std::regex decimal(R"(^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$)");
  static const std::regex pi_form(R"(^\s*([+-]?)(\d+\.?\d*)?\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, decimal)) return real(text);
  if (std::regex_match(text, m, pi_form)) {
    real value = pi<real>();
    if (m[2].matched) value *= real(m[2].str());
    if (m[3].matched) {
      const real den(m[3].str());
      if (den == 0) fail(ErrorKind::InvalidParams, "division by zero in '" + text + "'");
      value /= den;
    }
    return m[1].str() == "-" ? real(-value) : value;
  }
  fail(ErrorKind::InvalidParams, "cannot parse number '" + text + "'");
}

inline double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::InvalidParams, "bad value for " + key + ": '" + text + "'");
}

inline long long parse_integer(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::InvalidParams, "bad integer for " + key + ": '" + text + "'");
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// key = value lines; '#' starts a comment. Values may be quoted.
inline void apply_config_text(std::istream& in, Settings& s) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidParams, "config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "precision_digits" || key == "working_digits")
      s.precision.working_digits = static_cast<int>(parse_integer(key, value));
    else if (key == "residual_tol")
      s.precision.residual_tol = parse_double(key, value);
    else if (key == "sep_tol")
      s.precision.sep_tol = parse_double(key, value);
    else if (key == "realness_tol")
      s.precision.realness_tol = parse_double(key, value);
    else if (key == "max_iterations")
      s.precision.max_iterations = static_cast<int>(parse_integer(key, value));
    else if (key == "jobs")
      s.jobs = static_cast<unsigned>(std::max(1LL, parse_integer(key, value)));
    else if (key == "seed")
      s.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    else
      fail(ErrorKind::InvalidParams, "unknown config key '" + key + "'");
  }
}

inline void apply_config_file(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidParams, "cannot open config file " + path);
  apply_config_text(in, s);
}

// ---------------------------------------------------------------------------
// JSON

inline double num(const real& x) { return to_double(x); }

inline json params_json(const FamilyParams<real>& params) {
  return std::visit(
      [](const auto& p) -> json {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, MpParams<real>>)
          return {{"family", "mp"}, {"lambda", num(p.lambda)}, {"phi", num(p.phi)}};
        else if constexpr (std::is_same_v<P, PjParams<real>>)
          return {{"family", "pj"}, {"a", num(p.a)}, {"b", num(p.b)}};
        else
          return {{"family", "ch"}, {"p", num(p.p)}, {"q", num(p.q)}, {"r", num(p.r)}, {"s", num(p.s)}};
      },
      params);
}

inline json config_json(const Settings& s) {
  return {{"working_digits", s.precision.working_digits},
          {"realness_tol", s.precision.realness_tol},
          {"residual_tol", s.precision.residual_tol},
          {"sep_tol", s.precision.sep_tol},
          {"max_iterations", s.precision.max_iterations},
          {"seed", s.seed}};
}

inline json real_list(const std::vector<real>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(num(x));
  return out;
}

inline json to_json(const IdentityResidualReport<real>& r) {
  return {{"type", "identity_residual"},
          {"id", to_string(r.id)},
          {"check", r.check},
          {"n", r.n},
          {"params", params_json(r.params)},
          {"max_point_residual", r.max_point_residual},
          {"coeff_residual", r.coeff_residual},
          {"passed", r.passed},
          {"status", r.passed ? "passed" : "failed"}};
}

inline json to_json(PropositionId id, int n, const FamilyParams<real>& params,
                    const InterlacingCertificate<real>& c) {
  json violations = json::array();
  for (const auto& v : c.violations) violations.push_back({{"index", v.index}, {"description", v.description}});
  json j = {{"type", "interlacing_certificate"},
            {"prop", to_string(id)},
            {"n", n},
            {"params", params_json(params)},
            {"kind", to_string(c.kind)},
            {"ok", c.ok}};
  j["completion_case"] = c.completion_case ? json(to_string(*c.completion_case)) : json(nullptr);
  j["i_star"] = c.i_star ? json(*c.i_star) : json(nullptr);
  j["A"] = c.A ? json(num(*c.A)) : json(nullptr);
  j["gap_margin"] = num(c.gap_margin);
  j["sep_tol"] = num(c.sep_tol);
  j["violations"] = violations;
  j["first"] = real_list(c.first);
  j["second"] = real_list(c.second);
  j["status"] = c.ok ? "passed" : "failed";
  return j;
}

inline json summarize(const json& entries) {
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& e : entries) {
    const std::string status = e.value("status", "failed");
    if (status == "passed")
      ++passed;
    else if (status == "skipped")
      ++skipped;
    else
      ++failed;
  }
  return {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
}

// ---------------------------------------------------------------------------
// Seeded draws

/// Deterministic per-cell generator: the sweep seed and the cell key are
/// mixed into one 64-bit seed.
class CellRng {
 public:
  CellRng(std::uint64_t seed, const std::string& key) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char ch : key) h = (h ^ ch) * 1099511628211ULL;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    engine_.seed(seq);
  }

  /// Open interval (lo, hi), built from raw bits so it does not depend on the
  /// standard library's distribution implementation.
  double uniform(double lo, double hi) {
    const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
    return lo + u * (hi - lo);
  }

  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

inline MpParams<real> draw_mp(CellRng& rng) {
  const double lambda = rng.uniform(0.0, 5.0);
  const double phi = rng.uniform(0.1, 3.141592653589793 - 0.1);
  return {real(lambda), real(phi)};
}

inline PjParams<real> draw_pj(CellRng& rng, int n) {
  const double a = rng.uniform(-n - 10.0, -n - 1.0);
  const double b = rng.uniform(-5.0, 5.0);
  return {real(a), real(b)};
}

inline ChParams<real> draw_ch(CellRng& rng, bool symmetric) {
  const double p = rng.uniform(0.5, 5.0);
  const double q = rng.uniform(-4.0, 4.0);
  const double r = rng.uniform(0.5, 5.0);
  const double s = rng.uniform(-4.0, 4.0);
  return symmetric ? ChParams<real>{real(p), real(0), real(r), real(0)} : ChParams<real>{real(p), real(q), real(r), real(s)};
}

inline FamilyParams<real> draw_params(Family family, int n, CellRng& rng, bool symmetric = false) {
  switch (family) {
    case Family::MP: return draw_mp(rng);
    case Family::PJ: return draw_pj(rng, n);
    default: return draw_ch(rng, symmetric);
  }
}

// ---------------------------------------------------------------------------
// Sweep engine

struct Cell {
  std::string key;
  std::function<json()> run;
};

inline json error_entry(const std::string& key, const Error& e) {
  const bool skip = e.kind() == ErrorKind::SharedZeroSuspected || e.kind() == ErrorKind::MergeCollision;
  return {{"cell", key}, {"status", skip ? "skipped" : "failed"}, {"error", to_string(e.kind())}, {"reason", e.what()}};
}

/// Runs cells on up to `jobs` threads. The working precision must already be
/// installed; results come back sorted by cell key.
inline json run_cells(std::vector<Cell> cells, unsigned jobs) {
  std::vector<json> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        json entry = cells[i].run();
        json keyed = {{"cell", cells[i].key}};
        keyed.update(entry);
        results[i] = std::move(keyed);
      } catch (const Error& e) {
        results[i] = error_entry(cells[i].key, e);
      } catch (const std::exception& e) {
        results[i] = {{"cell", cells[i].key}, {"status", "failed"}, {"error", "exception"}, {"reason", e.what()}};
      }
    }
  };
  const unsigned extra = std::min<std::size_t>(jobs, cells.size()) > 1 ? std::min<std::size_t>(jobs, cells.size()) - 1 : 0;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::sort(results.begin(), results.end(),
            [](const json& a, const json& b) { return a["cell"].get<std::string>() < b["cell"].get<std::string>(); });
  json out = json::array();
  for (auto& r : results) out.push_back(std::move(r));
  return out;
}

inline std::string cell_key(const std::string& group, int index) {
  std::ostringstream os;
  os << group << '/' << std::setw(6) << std::setfill('0') << index;
  return os.str();
}

inline constexpr int kDefaultSamples = 64;

inline std::vector<Cell> identity_cells(std::uint64_t seed, int count, int n_max, const PrecisionConfig& config) {
  std::vector<Cell> cells;
  for (IdentityId id : kAllIdentities) {
    for (int i = 0; i < count; ++i) {
      std::string key = cell_key(to_string(id), i);
      cells.push_back({key, [=] {
                         CellRng rng(seed, key);
                         const int n = rng.integer(1, n_max);
                         const bool sym = id == IdentityId::CH_ch || id == IdentityId::CH_2;
                         const auto params = draw_params(family_of(id), n, rng, sym);
                         return to_json(residual_report(build_identity(id, n, params, config), kDefaultSamples, config));
                       }});
    }
  }
  return cells;
}

inline std::vector<Cell> christoffel_cells(std::uint64_t seed, int count, int n_max, const PrecisionConfig& config) {
  std::vector<Cell> cells;
  for (ShiftVariant v : {ShiftVariant::AShift, ShiftVariant::BShift}) {
    for (int i = 0; i < count; ++i) {
      std::string key = cell_key(std::string("christoffel-") + to_string(v), i);
      cells.push_back({key, [=] {
                         CellRng rng(seed, key);
                         const int n = rng.integer(1, n_max);
                         const ChParams<real> c = draw_ch(rng, false);
                         json j = to_json(christoffel_check(n, c, v, config));
                         j["variant"] = to_string(v);
                         return j;
                       }});
    }
  }
  return cells;
}

/// Parameters for one proposition draw, respecting its hypotheses.
inline std::pair<int, FamilyParams<real>> draw_for_proposition(PropositionId id, int n_max, CellRng& rng) {
  const bool sym = id == PropositionId::ChSymmetricA || id == PropositionId::ChSymmetricB;
  const int n = sym ? 2 * rng.integer(1, n_max / 2) : rng.integer(1, n_max);
  FamilyParams<real> params = draw_params(family_of(id), n, rng, sym);
  if (id == PropositionId::MpSymmetric) std::get<MpParams<real>>(params).phi = pi<real>() / 2;
  return {n, params};
}

inline std::vector<Cell> proposition_cells(std::uint64_t seed, int count, int n_max, const PrecisionConfig& config) {
  std::vector<Cell> cells;
  for (PropositionId id : kAllPropositions) {
    for (int i = 0; i < count; ++i) {
      std::string key = cell_key(to_string(id), i);
      cells.push_back({key, [=] {
                         CellRng rng(seed, key);
                         auto [n, params] = draw_for_proposition(id, n_max, rng);
                         return to_json(id, n, params, verify_proposition(id, n, params, config));
                       }});
    }
  }
  return cells;
}

/// P_n^(l)(x; phi) against P_{n+1}^(l+1)(x; phi) for general phi. Outcomes are
/// recorded, never asserted.
inline std::vector<Cell> exploratory_cells(std::uint64_t seed, int count, int n_max, const PrecisionConfig& config) {
  std::vector<Cell> cells;
  for (int i = 0; i < count; ++i) {
    std::string key = cell_key("mp-open", i);
    cells.push_back({key, [=] {
                       CellRng rng(seed, key);
                       const int n = rng.integer(1, n_max);
                       const MpParams<real> m = draw_mp(rng);
                       auto cert = mixrec::detail::certify_adjacent(mp_polynomial(n, m, config),
                                                            mp_polynomial(n + 1, MpParams<real>{m.lambda + 1, m.phi}, config),
                                                            config);
                       json violations = json::array();
                       for (const auto& v : cert.violations) violations.push_back(v.description);
                       return json{{"type", "observation"},
                                   {"n", n},
                                   {"params", params_json(FamilyParams<real>(m))},
                                   {"interlaces", cert.ok},
                                   {"violations", violations},
                                   {"status", cert.ok ? "passed" : "failed"}};
                     }});
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Worked examples

struct ReproductionRow {
  std::string quantity;
  long long expected_thousandths = 0;  // printed value times 1000
  real computed{0};
  bool match = false;
};

/// Compares at the print precision of the worked examples: both values
/// rounded to three decimals.
inline bool matches_three_decimals(const real& computed, long long expected_thousandths) {
  return std::llround(to_double(computed) * 1000.0) == expected_thousandths;
}

inline std::vector<ReproductionRow> reproduce_examples(const PrecisionConfig& config) {
  std::vector<ReproductionRow> rows;
  auto add = [&](std::string name, long long expected, const real& value) {
    rows.push_back({std::move(name), expected, value, matches_three_decimals(value, expected)});
  };
  auto add_zeros = [&](const std::string& name, const std::vector<long long>& expected, const Polynomial<real>& poly) {
    const ZeroSet<real> z = find_real_zeros(poly, config);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const real value = i < z.zeros.size() ? z.zeros[i] : real(std::nan(""));
      add(name + "[" + std::to_string(i + 1) + "]", expected[i], value);
    }
  };

  {
    const ChParams<real> c{real(2), real(1), real(4), real(3)};
    const int n = 5;
    add_zeros("n5 p_n", {-4445, -2957, -1746, -601, 750}, ch_polynomial(n, c, config));
    add("n5 A (a-shift)", -636, ch_uvw(n, c, ShiftVariant::AShift, config).completion_point);
    add_zeros("n5 p_n(p+1)", {-4766, -3205, -1889, -597, 911},
              ch_polynomial(n, mixrec::detail::shifted(c, ShiftVariant::AShift), config));
    add("n5 A (b-shift)", -3727, ch_uvw(n, c, ShiftVariant::BShift, config).completion_point);
    add_zeros("n5 p_n(r+1)", {-4483, -2919, -1664, -485, 915},
              ch_polynomial(n, mixrec::detail::shifted(c, ShiftVariant::BShift), config));
  }
  {
    const ChParams<real> c{real(2), real(0), real(4), real(0)};
    const int n = 6;
    add_zeros("n6 p_n", {-3041, -1623, -511, 511, 1623, 3041}, ch_polynomial(n, c, config));
    add("n6 A (a-shift)", 0, ch_uvw(n, c, ShiftVariant::AShift, config).completion_point);
    add_zeros("n6 p_n(p+1)", {-3316, -1800, -575, 575, 1800, 3316},
              ch_polynomial(n, mixrec::detail::shifted(c, ShiftVariant::AShift), config));
    add("n6 A (b-shift)", 0, ch_uvw(n, c, ShiftVariant::BShift, config).completion_point);
    add_zeros("n6 p_n(r+1)", {-3179, -1694, -533, 533, 1694, 3179},
              ch_polynomial(n, mixrec::detail::shifted(c, ShiftVariant::BShift), config));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Front end

namespace detail {

struct ParamArgs {
  std::string family, lambda, phi, a, b, p, q, r, s;
};

inline real required(const std::string& value, const char* flag) {
  if (value.empty()) fail(ErrorKind::InvalidParams, std::string("missing --") + flag);
  return parse_real(value);
}

inline FamilyParams<real> params_for(Family family, const ParamArgs& args) {
  FamilyParams<real> out;
  switch (family) {
    case Family::MP: out = MpParams<real>{required(args.lambda, "lambda"), required(args.phi, "phi")}; break;
    case Family::PJ: out = PjParams<real>{required(args.a, "a"), required(args.b, "b")}; break;
    case Family::CH:
      out = ChParams<real>{required(args.p, "p"), required(args.q, "q"), required(args.r, "r"), required(args.s, "s")};
      break;
  }
  if (!is_valid(out)) fail(ErrorKind::InvalidParams, "parameters outside the family's domain");
  return out;
}

inline Family family_from_string(const std::string& name) {
  if (name == "mp") return Family::MP;
  if (name == "pj") return Family::PJ;
  if (name == "ch") return Family::CH;
  fail(ErrorKind::InvalidParams, "unknown family '" + name + "' (expected mp, pj or ch)");
}

inline void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.output);
  if (!file) fail(ErrorKind::InvalidParams, "cannot write " + s.output);
  file << text;
}

inline json make_report(const std::string& command, const json& arguments, const Settings& s, json entries,
                        std::chrono::steady_clock::time_point start) {
  json report;
  report["command"] = command;
  report["arguments"] = arguments;
  report["config"] = config_json(s);
  report["summary"] = summarize(entries);
  report["entries"] = std::move(entries);
  if (!s.no_timestamp)
    report["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline bool all_passed(const json& report) {
  const auto& sum = report["summary"];
  return sum["failed"].get<int>() == 0 && sum["skipped"].get<int>() == 0;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using detail::ParamArgs;
  const auto start = std::chrono::steady_clock::now();

  CLI::App app{"Mixed recurrences, completion points and zero interlacing for MP, PJ and CH polynomials"};
  app.require_subcommand(1);

  Settings s;
  int digits = s.precision.working_digits;
  double residual_tol = s.precision.residual_tol, sep_tol = s.precision.sep_tol,
         realness_tol = s.precision.realness_tol;
  unsigned jobs = s.jobs;
  std::uint64_t seed = 0;
  std::string config_path;

  auto* o_digits = app.add_option("--precision-digits", digits, "working precision in decimal digits");
  auto* o_res = app.add_option("--residual-tol", residual_tol, "relative residual tolerance");
  auto* o_sep = app.add_option("--sep-tol", sep_tol, "zero separation tolerance");
  auto* o_real = app.add_option("--realness-tol", realness_tol, "bound on discarded imaginary parts");
  auto* o_jobs = app.add_option("--jobs", jobs, "worker threads for sweeps");
  auto* o_seed = app.add_option("--seed", seed, "sweep seed");
  app.add_option("--output", s.output, "write the result to this file");
  app.add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--no-timestamp", s.no_timestamp, "omit wall_ms from reports");
  app.add_option("--config", config_path, "key = value file; flags take precedence");

  ParamArgs pa;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--lambda", pa.lambda);
    sub->add_option("--phi", pa.phi, "radians; pi/4 style fractions accepted");
    sub->add_option("--a", pa.a);
    sub->add_option("--b", pa.b);
    sub->add_option("--p", pa.p);
    sub->add_option("--q", pa.q);
    sub->add_option("--r", pa.r);
    sub->add_option("--s", pa.s);
  };

  int n = -1;
  auto* zeros = app.add_subcommand("zeros", "zeros of one polynomial");
  zeros->fallthrough();
  zeros->add_option("--family", pa.family, "mp, pj or ch")->required();
  zeros->add_option("--n", n, "degree")->required();
  add_params(zeros);

  std::string id_name, prop_name, fixture;
  int samples = kDefaultSamples;
  auto* verify = app.add_subcommand("verify", "check one identity or one interlacing proposition");
  verify->fallthrough();
  auto* o_id = verify->add_option("--id", id_name, "identity id, e.g. MP_111 or CH_1");
  auto* o_prop = verify->add_option("--prop", prop_name, "proposition, e.g. mp-i or conthahn1-i");
  o_id->excludes(o_prop);
  verify->add_option("--n", n, "degree")->required();
  verify->add_option("--samples", samples, "sample points for the residual");
  verify->add_option("--fixture", fixture, "error-path fixture")->check(CLI::IsMember({"degenerate-u"}));
  add_params(verify);

  std::string suite;
  int count = 100, n_max = 10;
  auto* sweep = app.add_subcommand("sweep", "seeded random sweep");
  sweep->fallthrough();
  sweep->add_option("--suite", suite, "identities, christoffel, propositions or exploratory-mp-open-question")
      ->required();
  sweep->add_option("--count", count, "draws per identity or proposition");
  sweep->add_option("--n-max", n_max, "largest degree drawn");

  auto* reproduce = app.add_subcommand("reproduce-paper", "recompute the worked examples and compare");
  reproduce->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, s);
    if (o_digits->count()) s.precision.working_digits = digits;
    if (o_res->count()) s.precision.residual_tol = residual_tol;
    if (o_sep->count()) s.precision.sep_tol = sep_tol;
    if (o_real->count()) s.precision.realness_tol = realness_tol;
    if (o_jobs->count()) s.jobs = std::max(1u, jobs);
    if (o_seed->count()) s.seed = seed;
    s.precision.validate();
    ScopedPrecision scoped(s.precision);
    const PrecisionConfig& config = s.precision;

    if (zeros->parsed()) {
      if (n < 1) fail(ErrorKind::InvalidParams, "degree must be >= 1");
      const Family family = detail::family_from_string(pa.family);
      const FamilyParams<real> params = detail::params_for(family, pa);
      const ZeroSet<real> z = find_real_zeros(family_polynomial(n, params, config), config);
      if (z.complex_leakage > 0)
        err << "warning: " << z.complex_leakage << " non-real zero(s) omitted\n";
      if (s.format == "json") {
        json entries = json::array();
        for (std::size_t i = 0; i < z.size(); ++i)
          entries.push_back(
              {{"index", i + 1}, {"zero", num(z.zeros[i])}, {"residual", num(z.residuals[i])}, {"status", "passed"}});
        json args = {{"n", n}, {"params", params_json(params)}};
        detail::emit(s, detail::make_report("zeros", args, s, std::move(entries), start).dump(2) + "\n", out);
      } else {
        std::ostringstream csv;
        csv << "index,zero,residual\n";
        for (std::size_t i = 0; i < z.size(); ++i)
          csv << i + 1 << ',' << format_real(z.zeros[i], 17) << ',' << format_real(z.residuals[i], 17) << '\n';
        detail::emit(s, csv.str(), out);
      }
      return 0;
    }

    if (verify->parsed()) {
      if (id_name.empty() == prop_name.empty()) fail(ErrorKind::InvalidParams, "give exactly one of --id or --prop");
      if (n < 1) fail(ErrorKind::InvalidParams, "degree must be >= 1");
      json entries = json::array();
      json args = {{"n", n}};
      if (!id_name.empty()) {
        const auto id = identity_from_string(id_name);
        if (!id) fail(ErrorKind::InvalidParams, "unknown identity '" + id_name + "'");
        const FamilyParams<real> params = detail::params_for(family_of(*id), pa);
        args["id"] = id_name;
        args["params"] = params_json(params);
        IdentityInstance<real> inst;
        if (!fixture.empty()) {
          if (*id != IdentityId::CH_1 && *id != IdentityId::CH_22)
            fail(ErrorKind::InvalidParams, "the degenerate-u fixture applies to CH_1 and CH_22 only");
          const auto& c = std::get<ChParams<real>>(params);
          auto entries_in = christoffel_entries(n, c, *id == IdentityId::CH_1 ? ShiftVariant::AShift : ShiftVariant::BShift,
                                                config);
          entries_in.lower = entries_in.upper;  // identical rows: U = 0
          inst = build_ch_shift_identity(n, c, entries_in, config);
        } else {
          inst = build_identity(*id, n, params, config);
        }
        json entry = to_json(residual_report(inst, samples, config));
        if (inst.h_linear) entry["completion_point"] = num(-(*inst.h_linear)[0]);
        entries.push_back(std::move(entry));
      } else {
        const auto id = proposition_from_string(prop_name);
        if (!id) fail(ErrorKind::InvalidParams, "unknown proposition '" + prop_name + "'");
        if (!fixture.empty()) fail(ErrorKind::InvalidParams, "fixtures apply to identities only");
        const FamilyParams<real> params = detail::params_for(family_of(*id), pa);
        args["prop"] = prop_name;
        args["params"] = params_json(params);
        try {
          entries.push_back(to_json(*id, n, params, verify_proposition(*id, n, params, config)));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::SharedZeroSuspected && e.kind() != ErrorKind::MergeCollision) throw;
          entries.push_back(error_entry(prop_name, e));
        }
      }
      json report = detail::make_report("verify", args, s, std::move(entries), start);
      detail::emit(s, report.dump(2) + "\n", out);
      return detail::all_passed(report) ? 0 : 1;
    }

    if (sweep->parsed()) {
      if (count < 1) fail(ErrorKind::InvalidParams, "--count must be >= 1");
      if (n_max < 1) fail(ErrorKind::InvalidParams, "--n-max must be >= 1");
      std::vector<Cell> cells;
      bool exploratory = false;
      if (suite == "identities") {
        cells = identity_cells(s.seed, count, n_max, config);
      } else if (suite == "christoffel") {
        cells = christoffel_cells(s.seed, count, n_max, config);
      } else if (suite == "propositions") {
        if (n_max < 2) fail(ErrorKind::InvalidParams, "the propositions suite needs --n-max >= 2");
        cells = proposition_cells(s.seed, count, n_max, config);
      } else if (suite == "exploratory-mp-open-question") {
        cells = exploratory_cells(s.seed, count, n_max, config);
        exploratory = true;
      } else {
        fail(ErrorKind::InvalidParams, "unknown suite '" + suite + "'");
      }
      json args = {{"suite", suite}, {"count", count}, {"n_max", n_max}};
      json report = detail::make_report("sweep", args, s, run_cells(std::move(cells), s.jobs), start);
      const auto& sum = report["summary"];
      err << suite << ": passed " << sum["passed"] << ", failed " << sum["failed"] << ", skipped " << sum["skipped"]
          << '\n';
      detail::emit(s, report.dump(2) + "\n", out);
      return exploratory || sum["failed"].get<int>() == 0 ? 0 : 1;
    }

    if (reproduce->parsed()) {
      const auto rows = reproduce_examples(config);
      std::ostringstream table;
      table << std::left << std::setw(22) << "quantity" << std::right << std::setw(10) << "printed" << std::setw(10)
            << "computed" << std::setw(24) << "full" << "  match\n";
      json entries = json::array();
      for (const auto& row : rows) {
        std::ostringstream printed, rounded;
        printed << std::fixed << std::setprecision(3) << static_cast<double>(row.expected_thousandths) / 1000.0;
        rounded << std::fixed << std::setprecision(3) << to_double(row.computed) + 0.0;
        table << std::left << std::setw(22) << row.quantity << std::right << std::setw(10) << printed.str()
              << std::setw(10) << rounded.str() << std::setw(24) << format_real(row.computed, 17) << "  "
              << (row.match ? "yes" : "NO") << '\n';
        entries.push_back({{"quantity", row.quantity},
                           {"printed", static_cast<double>(row.expected_thousandths) / 1000.0},
                           {"computed", num(row.computed)},
                           {"status", row.match ? "passed" : "failed"}});
      }
      json report = detail::make_report("reproduce-paper", json::object(), s, std::move(entries), start);
      if (s.format == "json" && s.output.empty()) {
        out << report.dump(2) << '\n';
      } else {
        out << table.str();
        if (!s.output.empty()) detail::emit(s, report.dump(2) + "\n", out);
      }
      return detail::all_passed(report) ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 2;
}

}  // namespace mixrec::cli
