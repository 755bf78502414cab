#include "zgap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "zgap/bounds.hpp"
#include "zgap/constants.hpp"
#include "zgap/ctb_bounds.hpp"
#include "zgap/errors.hpp"
#include "zgap/output.hpp"
#include "zgap/tsang_bounds.hpp"
#include "zgap/unconditional.hpp"
#include "zgap/zero_data.hpp"

#ifndef ZGAP_VERSION
#define ZGAP_VERSION "0.0.0"
#endif

namespace zgap {
namespace {

// Sharp Inf constant for r >= 2 via the closed form.
constexpr double kCtbUniformInf = 0.61861;

struct CommonOptions {
  std::string format = "json";
  double tol = kDefaultQuadratureTol;
};

struct SolveOptions {
  std::string method;
  std::int64_t r = 1;
  std::string direction;
  double ell = 0.0;
  double c = 1.0;
  double beta = 1.0 / 3.0;
};

struct CheckOptions {
  std::string method;
  std::int64_t r_max = 0;
  double theta_sup = 0.0;
  double theta_inf = 0.0;
};

struct ZeroOptions {
  double t_min = 0.0;
  double t_max = 0.0;
  std::string out_path;
  std::int64_t r = 1;
  std::string zeros_file;
};

const std::map<std::string, Direction> kDirections{{"sup", Direction::Sup},
                                                   {"inf", Direction::Inf}};

void add_common(CLI::App* sub, CommonOptions& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--tol", common.tol, "Absolute quadrature target")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

OutputRecord make_record(std::string command, const CommonOptions& common) {
  OutputRecord rec;
  rec.command = std::move(command);
  rec.metadata = {{"version", std::string(ZGAP_VERSION)},
                  {"quadrature_tol", common.tol},
                  {"significant_digits", std::int64_t{9}}};
  return rec;
}

OutputRecord run_constants(const CommonOptions& common) {
  auto rec = make_record("constants", common);
  rec.columns = {"A0", "B0", "objective_at_argmax", "bracket_lo", "bracket_hi"};
  const auto c = compute_A0_B0();
  rec.add_row({c.value, c.argmax, c.objective_at_argmax, c.bracket.first, c.bracket.second});
  rec.metadata.emplace_back("bracket_width_tol", 1e-8);
  return rec;
}

OutputRecord run_table1(const CommonOptions& common, std::int64_t r_max) {
  auto rec = make_record("table1", common);
  rec.parameters = {{"r_max", r_max}};
  rec.columns = {"r", "theta_sup", "ell_sup", "margin_sup", "theta_inf", "ell_inf", "margin_inf"};
  for (const auto& row : table1(r_max, common.tol)) {
    rec.add_row({row.r, row.sup.theta, row.sup.ell.value_or(0.0), row.sup.margin,
                 row.inf.theta, row.inf.ell.value_or(0.0), row.inf.margin});
  }
  rec.metadata.emplace_back("theta_tol", 1e-6);
  return rec;
}

OutputRecord run_table2(const CommonOptions& common, std::int64_t r_max) {
  auto rec = make_record("table2", common);
  rec.parameters = {{"r_max", r_max}};
  rec.columns = {"r", "theta_sup", "theta_inf", "margin_sup", "margin_inf"};
  for (const auto& row : table2(r_max)) {
    rec.add_row({row.r, row.theta_sup, row.theta_inf, row.margin_sup, row.margin_inf});
  }
  rec.metadata.emplace_back("theta_tol", 1e-7);
  return rec;
}

OutputRecord run_solve(const CommonOptions& common, const SolveOptions& opt) {
  const Direction dir = kDirections.at(opt.direction);
  auto rec = make_record("solve", common);
  rec.parameters = {{"method", opt.method}, {"r", opt.r}, {"direction", opt.direction}};
  if (opt.method == "ctb") {
    const auto res = opt.ell > 0.0 ? solve_theta(opt.r, opt.ell, dir, common.tol)
                                   : optimize_ell(opt.r, dir, common.tol);
    if (opt.ell > 0.0) rec.parameters.emplace_back("ell", opt.ell);
    rec.columns = {"method", "r", "direction", "theta", "ell", "margin"};
    rec.add_row({std::string(to_string(res.method)), opt.r, opt.direction, res.theta,
                 res.ell.value_or(0.0), res.margin});
  } else if (opt.method == "tsang") {
    const auto res = solve_theta_tsang(opt.r, dir);
    rec.columns = {"method", "r", "direction", "theta", "margin"};
    rec.add_row({std::string(to_string(res.method)), opt.r, opt.direction, res.theta,
                 res.margin});
  } else {
    const OscillationHypothesis hyp{opt.c, opt.beta};
    rec.parameters.emplace_back("c", opt.c);
    rec.parameters.emplace_back("beta", opt.beta);
    const auto res = solve_gap_theta(hyp, opt.r, dir);
    rec.columns = {"method", "r", "direction", "theta", "margin", "window_scale"};
    rec.add_row({std::string(to_string(res.method)), opt.r, opt.direction, res.theta,
                 res.margin, gap_window_scale(hyp, opt.r, res.theta, dir)});
  }
  return rec;
}

OutputRecord run_check_uniform(const CommonOptions& common, CheckOptions opt) {
  auto rec = make_record("check-uniform", common);
  if (opt.method == "ctb") {
    if (opt.r_max == 0) opt.r_max = 10'000;
    if (opt.theta_sup == 0.0) opt.theta_sup = saddle_constants().value;
    if (opt.theta_inf == 0.0) opt.theta_inf = kCtbUniformInf;
    rec.parameters = {{"method", opt.method}, {"r_max", opt.r_max}};
    rec.columns = {"direction", "theta", "r_max",    "passed",
                   "worst_margin", "worst_r", "brace_monotone", "brace_at_r8", "rhs_at_r8"};
    for (const auto& [name, dir, theta] :
         {std::tuple{"sup", Direction::Sup, opt.theta_sup},
          std::tuple{"inf", Direction::Inf, opt.theta_inf}}) {
      const auto check = uniform_check(dir, theta, opt.r_max);
      rec.add_row({std::string(name), theta, opt.r_max, check.passed, check.worst_margin,
                   check.worst_r, check.brace_monotone, closed_form_brace(8, theta, dir),
                   closed_form_rhs(8, theta, dir)});
    }
  } else {
    if (opt.r_max == 0) opt.r_max = 1'000;
    if (opt.theta_sup == 0.0) opt.theta_sup = kTsangUniformSup;
    if (opt.theta_inf == 0.0) opt.theta_inf = kTsangUniformInf;
    rec.parameters = {{"method", opt.method}, {"r_max", opt.r_max}};
    rec.columns = {"direction", "theta", "r_max", "passed", "worst_margin", "threshold_r"};
    const auto check = uniform_tsang_check(opt.r_max, opt.theta_sup, opt.theta_inf);
    rec.add_row({std::string("sup"), opt.theta_sup, opt.r_max, check.sup_ok,
                 check.sup_worst_margin, check.sup_threshold_r});
    rec.add_row({std::string("inf"), opt.theta_inf, opt.r_max, check.inf_ok,
                 check.inf_worst_margin, std::int64_t{0}});
  }
  return rec;
}

OutputRecord run_zeros(const CommonOptions& common, const ZeroOptions& opt) {
  const auto zeros = find_zeros(opt.t_min, opt.t_max);
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) throw ValidationError("cannot write zero file '" + opt.out_path + "'");
    write_zeros(file, zeros);
  }
  auto rec = make_record("zeros", common);
  rec.parameters = {{"t_min", opt.t_min}, {"t_max", opt.t_max}};
  rec.columns = {"n", "ordinate"};
  const auto g = zeros.ordinates();
  for (std::size_t i = 0; i < g.size(); ++i) {
    rec.add_row({static_cast<std::int64_t>(i + 1), g[i]});
  }
  rec.metadata.emplace_back("scan_step", 0.05);
  rec.metadata.emplace_back("bisection_tol", 1e-9);
  return rec;
}

OutputRecord run_gaps(const CommonOptions& common, const ZeroOptions& opt) {
  const auto zeros = load_zeros(opt.zeros_file);
  const auto stats = gap_extrema(zeros, opt.r);
  auto rec = make_record("gaps", common);
  rec.parameters = {{"r", opt.r}, {"zeros_file", opt.zeros_file}};
  rec.columns = {"r",           "count",        "min_normalized", "argmin_index",
                 "max_normalized", "argmax_index", "mean_normalized"};
  rec.add_row({stats.r, stats.count, stats.min_normalized, stats.argmin_index,
               stats.max_normalized, stats.argmax_index, stats.mean_normalized});
  return rec;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const FormatError*>(&e)) return "format";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  return "runtime";
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit bounds on normalized gaps between zeta zeros", "zgap"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", ZGAP_VERSION);

  CommonOptions common;
  SolveOptions solve;
  CheckOptions check;
  ZeroOptions zero;
  std::int64_t table_r_max = 20;

  auto* constants_cmd = app.add_subcommand("constants", "A0 and its maximizer B0");
  add_common(constants_cmd, common);

  auto* table1_cmd = app.add_subcommand("table1", "Optimized (theta, ell) from the integral condition");
  add_common(table1_cmd, common);
  table1_cmd->add_option("--r-max", table_r_max, "Largest r")->check(CLI::Range(1, 200));

  auto* table2_cmd = app.add_subcommand("table2", "Moment-method theta for r = 1..r_max");
  add_common(table2_cmd, common);
  table2_cmd->add_option("--r-max", table_r_max, "Largest r")->check(CLI::Range(1, 10000));

  auto* solve_cmd = app.add_subcommand("solve", "Solve one bound");
  add_common(solve_cmd, common);
  solve_cmd->add_option("--method", solve.method)
      ->required()
      ->check(CLI::IsMember({"ctb", "tsang", "unconditional"}));
  solve_cmd->add_option("--r", solve.r)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1'000'000'000}));
  solve_cmd->add_option("--direction", solve.direction)
      ->required()
      ->check(CLI::IsMember({"sup", "inf"}));
  solve_cmd->add_option("--ell", solve.ell, "Fix ell instead of optimizing (ctb)")
      ->check(CLI::Range(1.0, 1e3));
  solve_cmd->add_option("--c", solve.c, "Oscillation constant (unconditional)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  solve_cmd->add_option("--beta", solve.beta, "Oscillation exponent (unconditional)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  auto* check_cmd = app.add_subcommand("check-uniform", "Sweep the uniform constants over r");
  add_common(check_cmd, common);
  check_cmd->add_option("--method", check.method)
      ->required()
      ->check(CLI::IsMember({"ctb", "tsang"}));
  check_cmd->add_option("--r-max", check.r_max, "Largest r (ctb: 10000, tsang: 1000)")
      ->check(CLI::Range(std::int64_t{5}, std::int64_t{1'000'000}));
  check_cmd->add_option("--theta-sup", check.theta_sup, "Sup constant to check");
  check_cmd->add_option("--theta-inf", check.theta_inf, "Inf constant to check");

  auto* zeros_cmd = app.add_subcommand("zeros", "Zeros of Z(t) by sign changes");
  add_common(zeros_cmd, common);
  zeros_cmd->add_option("--t-min", zero.t_min)->required();
  zeros_cmd->add_option("--t-max", zero.t_max)->required();
  zeros_cmd->add_option("--out", zero.out_path, "Also write a zero file");

  auto* gaps_cmd = app.add_subcommand("gaps", "Normalized r-gap extremes of a zero file");
  add_common(gaps_cmd, common);
  gaps_cmd->add_option("--r", zero.r)->required()->check(CLI::PositiveNumber);
  gaps_cmd->add_option("--zeros-file", zero.zeros_file)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    OutputRecord rec;
    if (*constants_cmd) {
      rec = run_constants(common);
    } else if (*table1_cmd) {
      rec = run_table1(common, table_r_max);
    } else if (*table2_cmd) {
      rec = run_table2(common, table_r_max);
    } else if (*solve_cmd) {
      rec = run_solve(common, solve);
    } else if (*check_cmd) {
      if (check.method == "ctb" && check.r_max != 0 && check.r_max < 8) {
        throw DomainError("check-uniform --method ctb needs --r-max >= 8");
      }
      rec = run_check_uniform(common, check);
    } else if (*zeros_cmd) {
      rec = run_zeros(common, zero);
    } else {
      rec = run_gaps(common, zero);
    }
    out << (common.format == "csv" ? to_csv(rec) : to_json(rec));
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << error_kind(e) << ": " << one_line(e.what()) << "\n";
    return 1;
  }
}

}  // namespace zgap
