#include "fsde/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace fsde::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

json meta_json(const RunMeta& meta) {
    return {{"seed", meta.seed},
            {"dt", meta.dt},
            {"r", meta.R},
            {"model", meta.model},
            {"warnings", meta.warnings}};
}

void dump(std::ostream& os, const json& doc) { os << doc.dump(2) << '\n'; }

} // namespace

std::string format_real(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_path_csv(std::ostream& os, const BrownianPath& path) {
    os << "t,W\n";
    for (const auto& p : cumulative(path)) {
        os << format_real(p.t) << ',' << format_real(p.value) << '\n';
    }
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t,X\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        os << format_real(traj.times[i]) << ',' << format_real(traj.values[i]) << '\n';
    }
}

void write_fuzzy_csv(std::ostream& os, const FuzzyTrajectory& ft) {
    os << "t,X_lower,X_upper,crossing\n";
    for (std::size_t i = 0; i < ft.times.size(); ++i) {
        os << format_real(ft.times[i]) << ',' << format_real(ft.lower[i]) << ','
           << format_real(ft.upper[i]) << ',' << (ft.lower[i] > ft.upper[i] ? 1 : 0) << '\n';
    }
}

void write_convergence_csv(std::ostream& os, const ConvergenceReport& report) {
    os << "R,dt,endpoint_error\n";
    for (const auto& e : report.entries) {
        os << e.R << ',' << format_real(e.dt) << ',' << format_real(e.endpoint_error) << '\n';
    }
}

void write_alpha_sweep_csv(std::ostream& os, const AlphaSweep& sweep) {
    os << "alpha,lower_T,upper_T\n";
    for (const auto& r : sweep.rows) {
        os << format_real(r.alpha) << ',' << format_real(r.lower_T) << ','
           << format_real(r.upper_T) << '\n';
    }
}

void write_path_json(std::ostream& os, const BrownianPath& path) {
    json t = json::array();
    json w = json::array();
    for (const auto& p : cumulative(path)) {
        t.push_back(p.t);
        w.push_back(p.value);
    }
    dump(os, {{"t0", path.t0()}, {"dt", path.dt()}, {"seed", path.seed()}, {"t", t}, {"w", w}});
}

void write_trajectory_json(std::ostream& os, const Trajectory& traj) {
    json doc = meta_json(traj.meta);
    doc["t"] = traj.times;
    doc["x"] = traj.values;
    dump(os, doc);
}

void write_fuzzy_json(std::ostream& os, const FuzzyTrajectory& ft) {
    json doc = meta_json(ft.meta);
    doc["alpha"] = ft.alpha;
    doc["t"] = ft.times;
    doc["x_lower"] = ft.lower;
    doc["x_upper"] = ft.upper;
    doc["crossings"] = ft.crossings;
    dump(os, doc);
}

void write_convergence_json(std::ostream& os, const ConvergenceReport& report) {
    json entries = json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"r", e.R}, {"dt", e.dt}, {"endpoint_error", e.endpoint_error}});
    }
    json doc = {{"model", report.model},
                {"ensemble_size", report.ensemble_size},
                {"first_seed", report.first_seed},
                {"entries", entries}};
    if (report.entries.size() >= 2) {
        doc["loglog_slope"] = loglog_slope(report);
    }
    dump(os, doc);
}

void write_alpha_sweep_json(std::ostream& os, const AlphaSweep& sweep) {
    json rows = json::array();
    for (const auto& r : sweep.rows) {
        rows.push_back({{"alpha", r.alpha}, {"lower_t", r.lower_T}, {"upper_t", r.upper_T}});
    }
    dump(os, {{"rows", rows}});
}

CsvTable read_csv(std::istream& is) {
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) {
        throw parse_error("read_csv: missing header row");
    }
    std::istringstream header(line);
    for (std::string cell; std::getline(header, cell, ',');) {
        table.header.emplace_back(trim(cell));
    }
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<double> row;
        std::istringstream cells(line);
        for (std::string cell; std::getline(cells, cell, ',');) {
            const auto text = trim(cell);
            double value = 0.0;
            const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
            if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
                throw parse_error("read_csv: line " + std::to_string(line_no) +
                                  ": not a number: '" + std::string(text) + "'");
            }
            row.push_back(value);
        }
        if (row.size() != table.header.size()) {
            throw parse_error("read_csv: line " + std::to_string(line_no) + ": expected " +
                              std::to_string(table.header.size()) + " cells");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::map<std::string, std::string> read_key_values(std::istream& is) {
    std::map<std::string, std::string> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw parse_error("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(view.substr(0, eq));
        if (key.empty()) {
            throw parse_error("config line " + std::to_string(line_no) + ": empty key");
        }
        out[std::string(key)] = std::string(trim(view.substr(eq + 1)));
    }
    return out;
}

} // namespace fsde::io
