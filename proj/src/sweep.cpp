#include "roamgame/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "roamgame/equilibrium.hpp"

namespace roamgame {

namespace {

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string congestion_name(Congestion c) {
  switch (c) {
    case Congestion::None: return "none";
    case Congestion::Linear: return "linear";
    case Congestion::MM1: return "mm1";
  }
  return "none";
}

std::string timestamp_utc() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::pair<std::string, std::string>> make_metadata(
    const GameParams& params, Mode mode) {
  return {
      {"delta", format_value(params.delta)},
      {"d_max", format_value(params.d_max)},
      {"r", format_value(params.r)},
      {"b1", format_value(params.b1)},
      {"b2", format_value(params.b2)},
      {"phi", format_value(params.phi())},
      {"gamma", format_value(params.gamma)},
      {"cd1", format_value(params.cd1)},
      {"cd2", format_value(params.cd2)},
      {"cb1", format_value(params.cb1)},
      {"cb2", format_value(params.cb2)},
      {"congestion", congestion_name(params.congestion)},
      {"mode", mode == Mode::Simplified ? "simplified" : "full"},
      {"timestamp", timestamp_utc()},
  };
}

void check_grid(const std::vector<double>& grid) {
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::invalid_argument("grid must be strictly increasing");
}

}  // namespace

std::vector<double> default_r_grid(const GameParams& params, int n) {
  params.validate();
  if (n < 1) throw std::invalid_argument("grid size must be >= 1");
  const double phi = params.phi();
  if (!(phi > 0.0))
    throw std::domain_error("default_r_grid requires phi > 0");
  const double step = 2.0 / (params.delta * phi) / n;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = (i + 0.5) * step;
  return grid;
}

SweepTable sweep_utilities_vs_r(const GameParams& params,
                                const std::vector<double>& r_grid, Mode mode) {
  params.validate();
  check_grid(r_grid);
  SweepTable table;
  table.columns = {"r", "p1", "p2", "u1_over_dmax", "u2_over_dmax",
                   "gap_over_dmax"};
  table.metadata = make_metadata(params, mode);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double phi = params.phi();
  for (double r : r_grid) {
    std::vector<double> row{r, nan, nan, nan, nan, nan};
    try {
      GameParams at_r = params;
      at_r.r = r;
      const EquilibriumResult ne = solve_ne(at_r, mode);
      if (ne.converged) {
        row[1] = ne.prices.p1;
        row[2] = ne.prices.p2;
        row[3] = ne.utilities.u1 / params.d_max;
        row[4] = ne.utilities.u2 / params.d_max;
        row[5] = ((1.0 - phi) * ne.utilities.u1 - ne.utilities.u2) /
                 params.d_max;
      }
    } catch (const std::exception&) {
      // leave the row's value cells empty
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

SweepTable sweep_best_response(const GameParams& params,
                               const std::vector<double>& price_grid,
                               Mode mode) {
  params.validate();
  check_grid(price_grid);
  SweepTable table;
  table.columns = {"p", "br1", "br2"};
  table.metadata = make_metadata(params, mode);
  for (double p : price_grid) {
    const double br1 = best_response(1, p, params, mode).price;
    const double br2 = best_response(2, p, params, mode).price;
    table.rows.push_back({p, br1, br2});
  }
  return table;
}

namespace {

// Piecewise-linear interpolation of ys over strictly increasing xs.
std::optional<double> interpolate(const std::vector<double>& xs,
                                  const std::vector<double>& ys, double x) {
  if (xs.empty() || x < xs.front() || x > xs.back()) return std::nullopt;
  const auto it = std::lower_bound(xs.begin(), xs.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - xs.begin());
  if (j == 0) return ys.front();
  const double w = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
  return ys[j - 1] + w * (ys[j] - ys[j - 1]);
}

}  // namespace

std::optional<PricePair> estimate_crossing(const SweepTable& table) {
  if (table.columns != std::vector<std::string>{"p", "br1", "br2"})
    throw std::invalid_argument("estimate_crossing expects a best-response table");
  std::vector<double> p, br1, br2;
  for (const auto& row : table.rows) {
    p.push_back(row[0]);
    br1.push_back(row[1]);
    br2.push_back(row[2]);
  }
  if (p.size() < 2) return std::nullopt;
  // Residual at grid point p_i: provider 1's reply to provider 2's reply,
  // minus p_i. A sign change brackets the curves' crossing.
  std::vector<double> residual(p.size());
  std::vector<bool> valid(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto reply = interpolate(p, br1, br2[i]);
    valid[i] = reply.has_value();
    residual[i] = valid[i] ? *reply - p[i] : 0.0;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!valid[i] || !valid[i + 1]) continue;
    // the origin is a trivial intersection (both replies vanish), not an
    // equilibrium candidate
    if (p[i] == 0.0 && br2[i] == 0.0) continue;
    if (residual[i] == 0.0) return PricePair{p[i], br2[i]};
    if ((residual[i] < 0.0) != (residual[i + 1] < 0.0)) {
      const double w = residual[i] / (residual[i] - residual[i + 1]);
      const double p1c = p[i] + w * (p[i + 1] - p[i]);
      const double p2c = br2[i] + w * (br2[i + 1] - br2[i]);
      return PricePair{p1c, p2c};
    }
  }
  return std::nullopt;
}

void export_table(const SweepTable& table, std::ostream& out,
                  TableFormat format) {
  if (format == TableFormat::Csv) {
    for (const auto& [key, value] : table.metadata)
      out << "# " << key << " = " << value << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out << ",";
        if (!std::isnan(row[i])) out << format_value(row[i]);
      }
      out << "\n";
    }
  } else {
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [key, value] : table.metadata) meta[key] = value;
    nlohmann::json meta_record = nlohmann::json::object();
    meta_record["metadata"] = meta;
    out << meta_record.dump() << "\n";
    for (const auto& row : table.rows) {
      nlohmann::json record = nlohmann::json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (std::isnan(row[i]))
          record[table.columns[i]] = nullptr;
        else
          record[table.columns[i]] = row[i];
      }
      out << record.dump() << "\n";
    }
  }
  if (!out) throw std::runtime_error("export_table: write failed");
}

void export_table(const SweepTable& table, const std::string& path,
                  TableFormat format) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("export_table: cannot open '" + path + "'");
  export_table(table, out, format);
  if (!out)
    throw std::runtime_error("export_table: write to '" + path + "' failed");
}

}  // namespace roamgame
