#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "roamgame/model.hpp"

namespace roamgame {

/// Tabular sweep output. Cells are doubles; NaN marks an empty cell
/// (a per-point solve failure).
struct SweepTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
};

enum class TableFormat { Csv, JsonLines };

/// Uniform grid of n points on (0, 2/(delta*phi)), open at both ends by half
/// a step. Requires phi > 0.
std::vector<double> default_r_grid(const GameParams& params, int n);

/// Equilibrium prices, utilities and fairness gap per roaming charge.
/// Columns: r, p1, p2, u1_over_dmax, u2_over_dmax, gap_over_dmax.
SweepTable sweep_utilities_vs_r(const GameParams& params,
                                const std::vector<double>& r_grid, Mode mode);

/// Best-response curves: br1 is provider 1's best response to p2 = p, br2 is
/// provider 2's best response to p1 = p. Columns: p, br1, br2.
SweepTable sweep_best_response(const GameParams& params,
                               const std::vector<double>& price_grid,
                               Mode mode);

/// Crossing of the two best-response curves, estimated by linear
/// interpolation along the grid; empty when the grid does not bracket it.
std::optional<PricePair> estimate_crossing(const SweepTable& table);

/// CSV: "#"-prefixed metadata comments, header row, 12 significant digits,
/// LF line endings, empty string for empty cells.
/// JSON-lines: leading metadata record, then one object per row with null
/// for empty cells.
void export_table(const SweepTable& table, std::ostream& out,
                  TableFormat format);

/// Same, writing to a file. Throws std::runtime_error naming the
/// destination on I/O failure.
void export_table(const SweepTable& table, const std::string& path,
                  TableFormat format);

}  // namespace roamgame
