#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fsde/analysis.hpp"
#include "fsde/brownian.hpp"
#include "fsde/solvers.hpp"

namespace fsde::io {

/// 17 significant digits, '.' separator,
/// independent of the global locale.
std::string format_real(double value);

// CSV files carry a header row and ',' delimiters.
void write_path_csv(std::ostream& os, const BrownianPath& path);         // t,W
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);     // t,X
void write_fuzzy_csv(std::ostream& os, const FuzzyTrajectory& ft);       // t,X_lower,X_upper,crossing
void write_convergence_csv(std::ostream& os, const ConvergenceReport& report);
void write_alpha_sweep_csv(std::ostream& os, const AlphaSweep& sweep);

// JSON documents mirror the types with lower snake case keys.
void write_path_json(std::ostream& os, const BrownianPath& path);
void write_trajectory_json(std::ostream& os, const Trajectory& traj);
void write_fuzzy_json(std::ostream& os, const FuzzyTrajectory& ft);
void write_convergence_json(std::ostream& os, const ConvergenceReport& report);
void write_alpha_sweep_json(std::ostream& os, const AlphaSweep& sweep);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV with a header row. Throws parse_error on malformed
/// cells or ragged rows.
CsvTable read_csv(std::istream& is);

/// Plain-text configuration: one `key = value` per line, '#' starts a
/// comment, blank lines ignored. Later keys override earlier ones.
std::map<std::string, std::string> read_key_values(std::istream& is);

} // namespace fsde::io
