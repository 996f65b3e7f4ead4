// roamgame: solver CLI for the incumbent/entrant cellular-pricing game with
// regulated roaming charges.
//
// Exit codes: 0 success, 1 invalid input or I/O failure, 2 numeric condition
// (non-convergence, degeneracy, bracket failure).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "roamgame/equilibrium.hpp"
#include "roamgame/fairness.hpp"
#include "roamgame/model.hpp"
#include "roamgame/sweep.hpp"

namespace {

using namespace roamgame;

struct Options {
  GameParams params;
  std::string congestion = "none";
  std::string mode = "simplified";
  std::string format = "csv";
  std::string output = "-";
  double phi = -1.0;  // < 0 means not given
  int points = 0;     // 0 means subcommand default
  double rmin = -1.0;
  double rmax = -1.0;
  double init1 = -1.0;
  double init2 = -1.0;
};

Congestion parse_congestion(const std::string& name) {
  if (name == "none") return Congestion::None;
  if (name == "linear") return Congestion::Linear;
  if (name == "mm1") return Congestion::MM1;
  throw std::invalid_argument("unknown congestion model '" + name + "'");
}

Mode parse_mode(const std::string& name) {
  if (name == "simplified") return Mode::Simplified;
  if (name == "full") return Mode::Full;
  throw std::invalid_argument("unknown mode '" + name + "'");
}

// Options live on the top-level app (so a flat "key = value" config file
// addresses them directly); subcommands fall through to them.
void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--delta", o.params.delta, "Price sensitivity (> 0)");
  cmd->add_option("--dmax", o.params.d_max, "Maximum total demand (> 0)");
  cmd->add_option("--r", o.params.r, "Roaming charge per unit demand (>= 0)");
  cmd->add_option("--b1", o.params.b1, "Incumbent demand capacity (> 0)");
  cmd->add_option("--b2", o.params.b2, "Entrant demand capacity (0 < b2 <= b1)");
  cmd->add_option("--phi", o.phi,
                  "Roaming fraction; back-computes b2 = b1*(1-phi)");
  cmd->add_option("--gamma", o.params.gamma, "Congestion headroom (0 < gamma < b2)");
  cmd->add_option("--cd1", o.params.cd1, "Incumbent per-unit-demand op-ex");
  cmd->add_option("--cd2", o.params.cd2, "Entrant per-unit-demand op-ex");
  cmd->add_option("--cb1", o.params.cb1, "Incumbent per-unit-infrastructure op-ex");
  cmd->add_option("--cb2", o.params.cb2, "Entrant per-unit-infrastructure op-ex");
  cmd->add_option("--congestion", o.congestion, "Congestion model")
      ->check(CLI::IsMember({"none", "linear", "mm1"}));
  cmd->add_option("--mode", o.mode, "Utility model")
      ->check(CLI::IsMember({"simplified", "full"}));
}

void add_table_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Table output format")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  cmd->add_option("-o,--output", o.output, "Output path, '-' for stdout");
  cmd->add_option("--points", o.points, "Number of grid points");
}

void finalize(Options& o) {
  if (o.phi >= 0.0) {
    if (o.phi >= 1.0) throw std::invalid_argument("--phi must be in [0, 1)");
    o.params.b2 = o.params.b1 * (1.0 - o.phi);
  }
  o.params.congestion = parse_congestion(o.congestion);
  o.params.validate();
}

TableFormat table_format(const Options& o) {
  return o.format == "csv" ? TableFormat::Csv : TableFormat::JsonLines;
}

int write_table(const SweepTable& table, const Options& o) {
  try {
    if (o.output == "-")
      export_table(table, std::cout, table_format(o));
    else
      export_table(table, o.output, table_format(o));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

PricePair initial_prices(const Options& o) {
  const double mid = price_cap(o.params) / 2.0;
  return {o.init1 >= 0.0 ? o.init1 : mid, o.init2 >= 0.0 ? o.init2 : mid};
}

int cmd_nash(const Options& o) {
  const Mode mode = parse_mode(o.mode);
  const GameParams& g = o.params;
  if (mode == Mode::Simplified && g.delta * g.r * g.phi() >= 2.0) {
    std::cerr << "error: delta * r * phi = " << g.delta * g.r * g.phi()
              << " >= 2; no feasible prices, no interior equilibrium\n";
    return 1;
  }
  const EquilibriumResult ne = solve_ne(g, mode, initial_prices(o));
  std::printf("p1* = %.10g\np2* = %.10g\n", ne.prices.p1, ne.prices.p2);
  std::printf("U1* = %.10g\nU2* = %.10g\n", ne.utilities.u1, ne.utilities.u2);
  std::printf("interior = %s\nsoc_ok = %s\n", ne.interior ? "yes" : "no",
              ne.soc_ok ? "yes" : "no");
  std::printf("converged = %s (iterations = %d, last_change = %.3g)\n",
              ne.converged ? "yes" : "no", ne.iterations, ne.last_change);
  if (mode == Mode::Simplified) {
    const PricePair cf = closed_form_ne(g);
    const double diff = std::max(std::abs(ne.prices.p1 - cf.p1),
                                 std::abs(ne.prices.p2 - cf.p2));
    std::printf("closed_form = (%.10g, %.10g), discrepancy = %.3g\n", cf.p1,
                cf.p2, diff);
  }
  return ne.converged ? 0 : 2;
}

int cmd_fair(const Options& o) {
  const Mode mode = parse_mode(o.mode);
  const GameParams& g = o.params;
  if (!(g.phi() > 0.0)) {
    std::cerr << "error: b1 == b2 gives phi = 0; the fairness gap is "
                 "identically zero and every roaming charge is fair\n";
    return 2;
  }
  FairnessResult res;
  try {
    res = find_rstar(g, mode);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::printf("r_star = %.10g\n", res.r_star);
  std::printf("gap_at_root = %.3g\n", res.gap_at_root);
  std::printf("bracket = [%.10g, %.10g]\n", res.bracket_lo, res.bracket_hi);
  if (mode == Mode::Simplified) {
    const double cf = closed_form_rstar(g);
    std::printf("closed_form = %.10g, discrepancy = %.3g\n", cf,
                std::abs(res.r_star - cf));
  }
  return 0;
}

int cmd_sweep(const Options& o) {
  const Mode mode = parse_mode(o.mode);
  const int n = o.points > 0 ? o.points : 200;
  std::vector<double> grid;
  if (o.rmax > 0.0) {
    const double lo = o.rmin >= 0.0 ? o.rmin : 0.0;
    if (!(o.rmax > lo)) {
      std::cerr << "error: --rmax must exceed --rmin\n";
      return 1;
    }
    grid.resize(n);
    for (int i = 0; i < n; ++i)
      grid[i] = n == 1 ? lo : lo + i * (o.rmax - lo) / (n - 1);
  } else {
    if (!(o.params.phi() > 0.0)) {
      std::cerr << "error: phi = 0 has no natural roaming-charge range; "
                   "pass --rmax\n";
      return 1;
    }
    grid = default_r_grid(o.params, n);
  }
  return write_table(sweep_utilities_vs_r(o.params, grid, mode), o);
}

int cmd_bestresponse(const Options& o) {
  const Mode mode = parse_mode(o.mode);
  const int n = o.points > 0 ? o.points : 101;
  const double cap = price_cap(o.params);
  if (!(cap > 0.0)) {
    std::cerr << "error: price cap is zero; no price grid\n";
    return 1;
  }
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i)
    grid[i] = n == 1 ? 0.0 : i * cap / (n - 1);
  const SweepTable table = sweep_best_response(o.params, grid, mode);
  if (const auto crossing = estimate_crossing(table))
    std::fprintf(stderr, "crossing ~ (%.6g, %.6g)\n", crossing->p1,
                 crossing->p2);
  else
    std::fprintf(stderr, "crossing not bracketed by the price grid\n");
  return write_table(table, o);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  o.params.r = 0.8;

  CLI::App app{
      "Two-provider cellular-pricing game with regulated roaming charges: "
      "demands, best responses, Nash equilibria and the fair roaming "
      "charge r*"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a 'key = value' file");

  CLI::App* nash = app.add_subcommand(
      "nash", "Solve for the Nash-equilibrium prices and utilities");
  CLI::App* fair = app.add_subcommand(
      "fair", "Find the fair roaming charge r* (zero fairness gap)");
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate equilibrium utilities and fairness gap versus r");
  CLI::App* bestresponse = app.add_subcommand(
      "bestresponse", "Tabulate both providers' best-response curves");

  add_common_options(&app, o);
  add_table_options(&app, o);
  app.add_option("--init1", o.init1, "Initial price for provider 1 (nash)");
  app.add_option("--init2", o.init2, "Initial price for provider 2 (nash)");
  app.add_option("--rmin", o.rmin, "Lower end of the r grid (sweep)");
  app.add_option("--rmax", o.rmax, "Upper end of the r grid (sweep)");
  for (CLI::App* cmd : {nash, fair, sweep, bestresponse}) cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    finalize(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 1;
  }

  try {
    if (nash->parsed()) return cmd_nash(o);
    if (fair->parsed()) return cmd_fair(o);
    if (sweep->parsed()) return cmd_sweep(o);
    return cmd_bestresponse(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
