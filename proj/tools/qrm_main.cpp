// qrm: construction, verification, encoding, bounds and table/curve output
// for the quantum Reed-Muller code family.
//
// Exit codes: 0 success, 1 domain or runtime failure (library errors are
// printed to stderr verbatim), 2 usage. Machine-readable output goes to
// stdout only.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qrm/css.hpp"
#include "qrm/error_analysis.hpp"
#include "qrm/monte_carlo.hpp"
#include "qrm/reed_muller.hpp"
#include "qrm/tables.hpp"
#include "qrm/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  int enum_cap = qrm::kDefaultEnumCapLog2;
  int leader_cap = qrm::kDefaultLeaderCapLog2;
  std::string format;  // empty: per-command default
  std::uint64_t seed = 0;
};

// Small key=value file: one pair per line, '#' starts a comment. Accepted
// keys match the documented configuration surface.
void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = path + ":" + std::to_string(lineno);
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string v) {
      std::size_t b = v.find_first_not_of(" \t\r");
      std::size_t e = v.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "enumeration_cap")
        s.enum_cap = std::stoi(value);
      else if (key == "leader_cap")
        s.leader_cap = std::stoi(value);
      else if (key == "output_format")
        s.format = value;
      else if (key == "seed")
        s.seed = std::stoull(value);
      else
        throw UsageError(where + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw UsageError(where + ": bad value '" + value + "' for " + key);
    } catch (const std::out_of_range&) {
      throw UsageError(where + ": bad value '" + value + "' for " + key);
    }
  }
}

void apply_environment(Settings& s) {
  if (const char* cap = std::getenv("QRM_ENUM_CAP")) {
    try {
      s.enum_cap = std::stoi(cap);
    } catch (const std::exception&) {
      throw UsageError("QRM_ENUM_CAP is not an integer: " + std::string(cap));
    }
  }
}

void validate_settings(const Settings& s) {
  if (s.enum_cap < 1 || s.enum_cap > 62) throw UsageError("enumeration cap must lie in [1, 62]");
  if (s.leader_cap < 1 || s.leader_cap > 62) throw UsageError("leader cap must lie in [1, 62]");
  if (!s.format.empty() && s.format != "csv" && s.format != "md" && s.format != "json")
    throw UsageError("output format must be csv, md or json");
}

std::string format_for(const Settings& s, const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (!s.format.empty()) return s.format;
  return "csv";
}

// Curve code grammar: rm:<r>,<m> or rep:<n>,<d>.
qrm::CodePoint parse_code_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  std::size_t comma = spec.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos)
    throw UsageError("bad code spec '" + spec + "', expected rm:<r>,<m> or rep:<n>,<d>");
  std::string kind = spec.substr(0, colon);
  long a = 0;
  long b = 0;
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    std::string first = spec.substr(colon + 1, comma - colon - 1);
    std::string second = spec.substr(comma + 1);
    a = std::stol(first, &used_a);
    b = std::stol(second, &used_b);
    if (used_a != first.size() || used_b != second.size() || first.empty() || second.empty())
      throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw UsageError("bad code spec '" + spec + "', expected rm:<r>,<m> or rep:<n>,<d>");
  }
  if (kind == "rm") return qrm::rm_curve_code(static_cast<int>(a), static_cast<int>(b));
  if (kind == "rep") return qrm::repetition_curve_code(a, b);
  throw UsageError("bad code spec '" + spec + "', kind must be rm or rep");
}

int run_tables(const Settings& s, const std::string& which, int max_m,
               const std::string& format_flag) {
  std::string format = format_for(s, format_flag);
  if (format != "csv" && format != "md")
    throw UsageError("tables supports csv or md output, not " + format);
  std::vector<qrm::CodeTableRow> rows =
      which == "classical" ? qrm::classical_code_table(max_m) : qrm::quantum_code_table(max_m);
  std::cout << (format == "csv" ? qrm::table_to_csv(rows) : qrm::table_to_markdown(rows));
  return 0;
}

int run_params(int r, int m, bool quantum) {
  if (quantum) {
    qrm::CssCode code = qrm::css_from_rm(r, m);
    std::cout << "[[" << code.n << ',' << code.k << ',' << code.d << "]] t=" << code.t << '\n';
  } else {
    long n = qrm::rm_block_length(m);
    long k = qrm::rm_dimension(r, m);
    long d = qrm::rm_distance(r, m);
    std::cout << '(' << n << ',' << k << ',' << d << ")\n";
  }
  return 0;
}

int run_matrix(int r, int m) {
  std::cout << qrm::rm_generator({r, m}).to_text();
  return 0;
}

int run_encode(const Settings& s, int r, int m, const std::string& w_bits, int basis) {
  qrm::CssCode code = qrm::css_from_rm(r, m);
  qrm::BitVec w = qrm::BitVec::from_string(w_bits);
  qrm::SparseState state = basis == 1 ? qrm::encode_basis1(code, w, s.enum_cap)
                                      : qrm::encode_basis2(code, w, s.enum_cap);
  std::cout << qrm::state_to_json(code, state) << '\n';
  return 0;
}

long threshold_from(long n, long d_flag, long t_flag, bool has_d, bool has_t) {
  if (has_d == has_t) throw UsageError("give exactly one of --d and --t");
  if (has_t) return t_flag;
  if (d_flag < 1 || d_flag > n) throw qrm::DomainError("distance must lie in [1, n]");
  return (d_flag - 1) / 2;
}

int run_bound(long n, long d, long t, bool has_d, bool has_t, double p) {
  long thr = threshold_from(n, d, t, has_d, has_t);
  double pe = qrm::block_error_bound(n, thr, p);
  double pq = qrm::qubit_error_rate(pe, n);
  std::printf("pe=%.9e\n", pe);
  std::printf("pq=%.9e\n", pq);
  return 0;
}

int run_curve(const std::vector<std::string>& code_specs, double p_min, double p_max, int points,
              const std::string& spacing) {
  std::vector<qrm::CodePoint> codes;
  if (code_specs.empty())
    codes = qrm::default_comparison_codes();
  else
    for (const std::string& spec : code_specs) codes.push_back(parse_code_spec(spec));
  qrm::GridSpacing grid =
      spacing == "linear" ? qrm::GridSpacing::kLinear : qrm::GridSpacing::kLog;
  std::vector<qrm::CodeCurve> curves = qrm::performance_curves(codes, p_min, p_max, points, grid);
  std::ostringstream out;
  qrm::write_curve_csv(out, curves);
  std::cout << out.str();
  return 0;
}

int run_mc(const Settings& s, long n, long d, long t, bool has_d, bool has_t, double p,
           long trials, std::uint64_t seed) {
  long thr = threshold_from(n, d, t, has_d, has_t);
  qrm::McResult res = qrm::monte_carlo_block_error(n, thr, p, trials, seed);
  (void)s;
  std::printf("estimate=%.9e\n", res.estimate);
  std::printf("std_error=%.9e\n", res.std_error);
  std::printf("trials=%ld\n", res.trials);
  std::printf("seed=%llu\n", static_cast<unsigned long long>(res.seed));
  std::printf("algorithm=%s\n", res.algorithm);
  return 0;
}

int run_verify(const Settings& s, int max_m) {
  qrm::VerifyOptions opts;
  opts.max_m = max_m;
  opts.enum_cap_log2 = s.enum_cap;
  opts.leader_cap_log2 = s.leader_cap;
  std::vector<qrm::CheckResult> results = qrm::run_verification(opts);
  int passed = 0;
  int skipped = 0;
  const qrm::CheckResult* first_fail = nullptr;
  for (const qrm::CheckResult& check : results) {
    const char* tag = check.status == qrm::CheckStatus::kPass   ? "PASS"
                      : check.status == qrm::CheckStatus::kSkip ? "SKIP"
                                                                : "FAIL";
    std::cout << tag << ' ' << check.name << ": " << check.detail << '\n';
    if (check.status == qrm::CheckStatus::kPass) ++passed;
    if (check.status == qrm::CheckStatus::kSkip) ++skipped;
    if (check.status == qrm::CheckStatus::kFail && first_fail == nullptr) first_fail = &check;
  }
  int failed = static_cast<int>(results.size()) - passed - skipped;
  std::cerr << passed << " passed, " << skipped << " skipped, " << failed << " failed\n";
  if (first_fail != nullptr) {
    std::cerr << "first failing check: " << first_fail->name << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Reed-Muller code toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  int enum_cap_flag = 0;
  int leader_cap_flag = 0;
  app.add_option("--config", config_path, "key = value file for caps, seed and output format");
  auto* enum_cap_opt =
      app.add_option("--enum-cap", enum_cap_flag, "log2 cap on codeword enumerations");
  auto* leader_cap_opt =
      app.add_option("--leader-cap", leader_cap_flag, "log2 cap on coset leader counts");

  auto* tables = app.add_subcommand("tables", "code parameter tables");
  std::string which;
  int tables_max_m = 10;
  std::string format_flag;
  tables->add_option("--which", which, "classical or quantum")
      ->required()
      ->check(CLI::IsMember({"classical", "quantum"}));
  tables->add_option("--max-m", tables_max_m, "largest m, at least 2")->check(CLI::Range(2, 30));
  tables->add_option("--format", format_flag, "csv or md")
      ->check(CLI::IsMember({"csv", "md"}));

  auto* params = app.add_subcommand("params", "one-line code parameters");
  int r = 0;
  int m = 0;
  bool quantum = false;
  params->add_option("--r", r, "order")->required();
  params->add_option("--m", m, "log2 block length")->required();
  params->add_flag("--quantum", quantum, "report the quantum code of the pair");

  auto* matrix = app.add_subcommand("matrix", "generator matrix rows as 0/1 text");
  matrix->add_option("--r", r, "order")->required();
  matrix->add_option("--m", m, "log2 block length")->required();

  auto* encode = app.add_subcommand("encode", "encoded basis state as JSON");
  std::string w_bits;
  int basis = 1;
  encode->add_option("--r", r, "order")->required();
  encode->add_option("--m", m, "log2 block length")->required();
  encode->add_option("--w", w_bits, "codeword of C1 labeling the state")->required();
  encode->add_option("--basis", basis, "1 or 2")->required()->check(CLI::Range(1, 2));

  auto* bound = app.add_subcommand("bound", "block and qubit error-rate bound");
  long bound_n = 0;
  long d_flag = 0;
  long t_flag = 0;
  double p = 0;
  auto* bound_d = bound->add_option("--d", d_flag, "code distance");
  auto* bound_t = bound->add_option("--t", t_flag, "correctable errors");
  bound->add_option("--n", bound_n, "block length")->required();
  bound->add_option("--p", p, "physical error probability")->required();

  auto* curve = app.add_subcommand("curve", "pe/pq curves as CSV");
  std::vector<std::string> code_specs;
  double p_min = 1e-4;
  double p_max = 0.2;
  int points = 50;
  std::string spacing = "log";
  curve->add_option("--codes", code_specs, "code specs rm:<r>,<m> or rep:<n>,<d>");
  curve->add_option("--p-min", p_min, "lowest physical error rate");
  curve->add_option("--p-max", p_max, "highest physical error rate");
  curve->add_option("--points", points, "grid size");
  curve->add_option("--spacing", spacing, "linear or log")
      ->check(CLI::IsMember({"linear", "log"}));

  auto* mc = app.add_subcommand("mc", "Monte Carlo block error estimate");
  long trials = 100000;
  std::uint64_t seed_flag = 0;
  auto* mc_d = mc->add_option("--d", d_flag, "code distance");
  auto* mc_t = mc->add_option("--t", t_flag, "correctable errors");
  mc->add_option("--n", bound_n, "block length")->required();
  mc->add_option("--p", p, "physical error probability")->required();
  mc->add_option("--trials", trials, "trial count");
  auto* seed_opt = mc->add_option("--seed", seed_flag, "RNG seed");

  auto* verify = app.add_subcommand("verify", "structural self-checks");
  int verify_max_m = 6;
  verify->add_option("--max-m", verify_max_m, "largest m, at least 2")->check(CLI::Range(2, 30));

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    Settings settings;
    if (!config_path.empty()) apply_config_file(settings, config_path);
    apply_environment(settings);
    if (enum_cap_opt->count() > 0) settings.enum_cap = enum_cap_flag;
    if (leader_cap_opt->count() > 0) settings.leader_cap = leader_cap_flag;
    if (seed_opt->count() > 0) settings.seed = seed_flag;
    validate_settings(settings);

    if (tables->parsed()) return run_tables(settings, which, tables_max_m, format_flag);
    if (params->parsed()) return run_params(r, m, quantum);
    if (matrix->parsed()) return run_matrix(r, m);
    if (encode->parsed()) return run_encode(settings, r, m, w_bits, basis);
    if (bound->parsed())
      return run_bound(bound_n, d_flag, t_flag, bound_d->count() > 0, bound_t->count() > 0, p);
    if (curve->parsed()) return run_curve(code_specs, p_min, p_max, points, spacing);
    if (mc->parsed())
      return run_mc(settings, bound_n, d_flag, t_flag, mc_d->count() > 0, mc_t->count() > 0, p,
                    trials, settings.seed);
    if (verify->parsed()) return run_verify(settings, verify_max_m);
    std::cerr << "no subcommand given\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const qrm::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
