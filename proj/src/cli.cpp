#include "fsde/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fsde/analysis.hpp"
#include "fsde/io.hpp"

namespace fsde::cli {

namespace {

class output_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Long option names accepted on the command line and as config keys.
const std::vector<std::string> option_keys = {
    "model", "mu",   "sigma", "x0",   "t0",   "T",   "dt",       "dt-exp",
    "R",     "alpha", "alphas", "seed", "seeds", "out", "exact-out", "format"};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

[[noreturn]] void bad_value(std::string_view flag, std::string_view text, std::string_view why) {
    throw parse_error("--" + std::string(flag) + ": " + std::string(why) + " (got '" +
                      std::string(text) + "')");
}

template <typename T>
T parse_number(std::string_view text, std::string_view flag) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        bad_value(flag, text, "not a valid number");
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (!std::isfinite(value)) {
            bad_value(flag, text, "must be finite");
        }
    }
    return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, std::string_view flag) {
    std::vector<T> out;
    for (auto part : split(text, ',')) {
        out.push_back(parse_number<T>(part, flag));
    }
    return out;
}

std::string default_output(Command c, Format f) {
    return "fsde-" + std::string(to_string(c)) + (f == Format::csv ? ".csv" : ".json");
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw output_error("cannot open output file '" + path + "'");
    }
    body(os);
    os.close();
    if (!os) {
        throw output_error("failed writing output file '" + path + "'");
    }
}

FuzzyModelParams fuzzy_params(const RunConfig& c) {
    return FuzzyModelParams(c.model, c.mu, c.sigma, c.x0);
}

CrispParams crisp_params(const RunConfig& c) { return fuzzy_params(c).peak(); }

std::vector<TimePoint> exact_solution(const CrispParams& p, const BrownianPath& path) {
    if (p.kind == ModelKind::gbm) {
        return exact_gbm({p.mu, p.sigma, p.x0}, path);
    }
    return exact_ou({p.mu, p.sigma, p.x0}, path);
}

void report_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
}

std::string fmt(double v) { return io::format_real(v); }

void run_paths(const RunConfig& c, const BrownianPath& path, std::ostream& out) {
    write_file(c.out, [&](std::ostream& os) {
        c.format == Format::csv ? io::write_path_csv(os, path) : io::write_path_json(os, path);
    });
    out << "paths: n=" << path.size() << " dt=" << fmt(path.dt()) << " seed=" << path.seed()
        << " W(T)=" << fmt(cumulative(path).back().value) << '\n';
}

void run_solve(const RunConfig& c, const BrownianPath& path, std::ostream& out, std::ostream& err) {
    const CrispParams p = crisp_params(c);
    const Trajectory traj = euler_maruyama(make_model(p), path, c.Rs.front());
    report_warnings(traj.meta.warnings, err);
    const auto exact = exact_solution(p, path);
    write_file(c.out, [&](std::ostream& os) {
        c.format == Format::csv ? io::write_trajectory_csv(os, traj)
                                : io::write_trajectory_json(os, traj);
    });
    if (c.exact_out) {
        Trajectory reference{{}, {}, {path.seed(), path.dt(), 1, "exact " + traj.meta.model, {}}};
        for (const auto& pt : exact) {
            reference.times.push_back(pt.t);
            reference.values.push_back(pt.value);
        }
        write_file(*c.exact_out, [&](std::ostream& os) {
            c.format == Format::csv ? io::write_trajectory_csv(os, reference)
                                    : io::write_trajectory_json(os, reference);
        });
    }
    out << "solve " << to_string(p.kind) << ": X_em(T)=" << fmt(traj.values.back())
        << (p.kind == ModelKind::gbm ? " X_exact(T)=" : " X_ou_oracle(T)=")
        << fmt(exact.back().value) << " endpoint_error=" << fmt(endpoint_error(traj, exact))
        << '\n';
}

void run_fuzzy(const RunConfig& c, const BrownianPath& path, std::ostream& out, std::ostream& err) {
    const FuzzyModelParams fp = fuzzy_params(c);
    const bool envelope = c.command == Command::envelope;
    const FuzzyTrajectory ft = envelope ? vertex_envelope(fp, path, c.Rs.front(), c.alpha)
                                        : fuzzy_euler_maruyama(fp, path, c.Rs.front(), c.alpha);
    report_warnings(ft.meta.warnings, err);
    write_file(c.out, [&](std::ostream& os) {
        c.format == Format::csv ? io::write_fuzzy_csv(os, ft) : io::write_fuzzy_json(os, ft);
    });
    if (c.exact_out) {
        // Closed-form (or oracle) solutions at the two corner parameter sets.
        const auto lo = exact_solution(corner_parameters(fp, c.alpha, Side::lower), path);
        const auto hi = exact_solution(corner_parameters(fp, c.alpha, Side::upper), path);
        FuzzyTrajectory reference;
        reference.alpha = c.alpha;
        reference.meta = {path.seed(), path.dt(), 1, "exact corners " + ft.meta.model, {}};
        for (std::size_t i = 0; i < lo.size(); ++i) {
            reference.times.push_back(lo[i].t);
            reference.lower.push_back(lo[i].value);
            reference.upper.push_back(hi[i].value);
        }
        reference.crossings = find_crossings(reference.lower, reference.upper);
        write_file(*c.exact_out, [&](std::ostream& os) {
            c.format == Format::csv ? io::write_fuzzy_csv(os, reference)
                                    : io::write_fuzzy_json(os, reference);
        });
    }
    const CrossingReport cr = crossing_report(ft);
    out << to_string(c.command) << ' ' << to_string(c.model) << " alpha=" << fmt(c.alpha)
        << ": X_lower(T)=" << fmt(ft.lower.back()) << " X_upper(T)=" << fmt(ft.upper.back())
        << " crossings=" << cr.count << " crossing_fraction=" << fmt(cr.fraction) << '\n';
}

void run_converge(const RunConfig& c, std::ostream& out) {
    if (c.model != ModelKind::gbm) {
        throw parse_error("--model: converge needs a closed-form solution and supports gbm only");
    }
    const CrispParams p = crisp_params(c);
    std::vector<std::uint64_t> seeds(c.seeds);
    for (std::size_t k = 0; k < seeds.size(); ++k) {
        seeds[k] = derive_seed(c.seed, k);
    }
    const ConvergenceReport report =
        convergence_study({p.mu, p.sigma, p.x0}, c.T - c.t0, c.dt, c.Rs, seeds);
    write_file(c.out, [&](std::ostream& os) {
        c.format == Format::csv ? io::write_convergence_csv(os, report)
                                : io::write_convergence_json(os, report);
    });
    out << "converge gbm: seeds=" << report.ensemble_size;
    for (const auto& e : report.entries) {
        out << " R=" << e.R << ":" << fmt(e.endpoint_error);
    }
    if (report.entries.size() >= 2) {
        out << " slope=" << fmt(loglog_slope(report));
    }
    out << '\n';
}

void run_alpha_sweep(const RunConfig& c, const BrownianPath& path, std::ostream& out,
                     std::ostream& err) {
    const FuzzyModelParams fp = fuzzy_params(c);
    const AlphaSweep sweep = alpha_sweep(fp, path, c.Rs.front(), c.alphas);
    if (c.model == ModelKind::langevin && fp.mu().right() * c.dt * c.Rs.front() >= 1.0) {
        err << "warning: mu * dt >= 1 at the upper corner, explicit Euler-Maruyama is unstable\n";
    }
    write_file(c.out, [&](std::ostream& os) {
        c.format == Format::csv ? io::write_alpha_sweep_csv(os, sweep)
                                : io::write_alpha_sweep_json(os, sweep);
    });
    const auto& first = sweep.rows.front();
    const auto& last = sweep.rows.back();
    out << "alpha-sweep " << to_string(c.model) << ": levels=" << sweep.rows.size() << " alpha="
        << fmt(first.alpha) << ":[" << fmt(first.lower_T) << ", " << fmt(first.upper_T)
        << "] alpha=" << fmt(last.alpha) << ":[" << fmt(last.lower_T) << ", "
        << fmt(last.upper_T) << "]\n";
}

} // namespace

std::string_view to_string(Command c) noexcept {
    switch (c) {
    case Command::paths:
        return "paths";
    case Command::solve:
        return "solve";
    case Command::fuzzy_solve:
        return "fuzzy-solve";
    case Command::envelope:
        return "envelope";
    case Command::converge:
        return "converge";
    case Command::alpha_sweep:
        return "alpha-sweep";
    }
    return "unknown";
}

std::size_t RunConfig::fine_steps() const {
    const double steps = (T - t0) / dt;
    const auto n = static_cast<std::size_t>(std::llround(steps));
    if (n == 0 || std::abs(steps - static_cast<double>(n)) > 1e-9 * steps) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "--dt: step " << dt << " does not tile [" << t0 << ", " << T << ']';
        throw divisibility_error(msg.str());
    }
    return n;
}

TriangularFuzzyNumber parse_tfn(std::string_view text, std::string_view flag) {
    const auto parts = split(text, ',');
    if (parts.size() == 1) {
        return TriangularFuzzyNumber::crisp(parse_number<double>(parts[0], flag));
    }
    if (parts.size() != 3) {
        bad_value(flag, text, "expected a number or a triple l,m,r");
    }
    const double l = parse_number<double>(parts[0], flag);
    const double m = parse_number<double>(parts[1], flag);
    const double r = parse_number<double>(parts[2], flag);
    if (l > m || m > r) {
        bad_value(flag, text, "triangular fuzzy number must satisfy l <= m <= r");
    }
    return {l, m, r};
}

RunConfig make_config(Command command, const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
        if (std::find(option_keys.begin(), option_keys.end(), key) == option_keys.end()) {
            throw parse_error("unknown option '" + key + "'");
        }
    }
    const auto get = [&](const std::string& key) -> std::optional<std::string> {
        if (auto it = values.find(key); it != values.end()) {
            return it->second;
        }
        return std::nullopt;
    };

    RunConfig c;
    c.command = command;
    if (auto v = get("model")) {
        try {
            c.model = parse_model_kind(trim(*v));
        } catch (const parse_error&) {
            bad_value("model", *v, "expected gbm or langevin");
        }
    }
    const bool gbm = c.model == ModelKind::gbm;
    c.mu = parse_tfn(get("mu").value_or(gbm ? "0.65,0.75,0.85" : "8,10,12"), "mu");
    c.sigma = parse_tfn(get("sigma").value_or(gbm ? "0.25,0.30,0.35" : "0.5,1,1.5"), "sigma");
    c.x0 = parse_tfn(get("x0").value_or("1"), "x0");

    if (auto v = get("t0")) {
        c.t0 = parse_number<double>(*v, "t0");
    }
    if (auto v = get("T")) {
        c.T = parse_number<double>(*v, "T");
    }
    if (!(c.T > c.t0)) {
        throw parse_error("--T: horizon must exceed t0");
    }
    const auto dt = get("dt");
    const auto dt_exp = get("dt-exp");
    if (dt && dt_exp) {
        throw parse_error("--dt and --dt-exp are mutually exclusive");
    }
    if (dt) {
        c.dt = parse_number<double>(*dt, "dt");
    } else if (dt_exp) {
        c.dt = std::ldexp(1.0, parse_number<int>(*dt_exp, "dt-exp"));
    }
    if (!(c.dt > 0.0)) {
        bad_value("dt", dt.value_or(dt_exp.value_or("")), "step must be positive");
    }

    const bool converge = command == Command::converge;
    if (auto v = get("R")) {
        c.Rs = parse_list<std::size_t>(*v, "R");
    } else {
        c.Rs = converge ? std::vector<std::size_t>{8, 4, 2} : std::vector<std::size_t>{1};
    }
    if (!converge && c.Rs.size() != 1) {
        bad_value("R", *get("R"), "a single coarsening factor is expected for this command");
    }
    for (std::size_t R : c.Rs) {
        if (R == 0) {
            bad_value("R", *get("R"), "coarsening factor must be >= 1");
        }
    }

    if (auto v = get("alpha")) {
        c.alpha = parse_number<double>(*v, "alpha");
        if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) {
            bad_value("alpha", *v, "must lie in [0, 1]");
        }
    }
    if (auto v = get("alphas")) {
        c.alphas = parse_list<double>(*v, "alphas");
        for (std::size_t i = 0; i < c.alphas.size(); ++i) {
            if (!(c.alphas[i] >= 0.0 && c.alphas[i] <= 1.0) ||
                (i > 0 && !(c.alphas[i] > c.alphas[i - 1]))) {
                bad_value("alphas", *v, "levels must be strictly increasing within [0, 1]");
            }
        }
    } else {
        c.alphas = default_alpha_grid();
    }

    if (auto v = get("seed")) {
        c.seed = parse_number<std::uint64_t>(*v, "seed");
    }
    c.seeds = converge ? 1000 : 1;
    if (auto v = get("seeds")) {
        c.seeds = parse_number<std::size_t>(*v, "seeds");
        if (c.seeds == 0) {
            bad_value("seeds", *v, "ensemble size must be >= 1");
        }
    }

    if (auto v = get("format")) {
        const auto f = trim(*v);
        if (f == "csv") {
            c.format = Format::csv;
        } else if (f == "json") {
            c.format = Format::json;
        } else {
            bad_value("format", *v, "expected csv or json");
        }
    }
    c.out = get("out").value_or(default_output(command, c.format));
    c.exact_out = get("exact-out");

    const std::size_t n = c.fine_steps();
    for (std::size_t R : c.Rs) {
        if (n % R != 0) {
            throw divisibility_error("--R: " + std::to_string(R) + " does not divide the " +
                                     std::to_string(n) + " fine steps");
        }
    }
    // Surfaces model-level constraints (e.g. positive Langevin support) now.
    const FuzzyModelParams fp(c.model, c.mu, c.sigma, c.x0);
    (void)fp;
    return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.command == Command::converge) {
            run_converge(c, out);
            return exit_code::ok;
        }
        const BrownianPath path = generate_path(c.t0, c.dt, c.fine_steps(), c.seed);
        switch (c.command) {
        case Command::paths:
            run_paths(c, path, out);
            break;
        case Command::solve:
            run_solve(c, path, out, err);
            break;
        case Command::fuzzy_solve:
        case Command::envelope:
            run_fuzzy(c, path, out, err);
            break;
        case Command::alpha_sweep:
            run_alpha_sweep(c, path, out, err);
            break;
        case Command::converge:
            break;
        }
        return exit_code::ok;
    } catch (const output_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::output;
    } catch (const divisibility_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::divisibility;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_value;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_value;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Euler-Maruyama solver for SDEs with triangular fuzzy parameters"};
    app.require_subcommand(1);

    struct Sub {
        Command command;
        const char* help;
        CLI::App* app = nullptr;
    };
    std::vector<Sub> subs = {
        {Command::paths, "generate a seeded Brownian path (t, W)"},
        {Command::solve, "crisp Euler-Maruyama run at the TFN peaks"},
        {Command::fuzzy_solve, "lower/upper bound runs at one alpha level"},
        {Command::envelope, "ordered min/max band over all parameter corners"},
        {Command::converge, "ensemble endpoint-error study for gbm"},
        {Command::alpha_sweep, "terminal bounds over a grid of alpha levels"},
    };
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option*> options;
    std::string config_path;
    for (auto& sub : subs) {
        sub.app = app.add_subcommand(std::string(to_string(sub.command)), sub.help);
        for (const auto& key : option_keys) {
            options[std::string(to_string(sub.command)) + "/" + key] =
                sub.app->add_option("--" + key, raw[key]);
        }
        sub.app->add_option("--config", config_path, "key = value file; flags override it");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    const Sub* chosen = nullptr;
    for (const auto& sub : subs) {
        if (sub.app->parsed()) {
            chosen = &sub;
        }
    }

    try {
        std::map<std::string, std::string> values;
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) {
                err << "error: cannot read config file '" << config_path << "'\n";
                return exit_code::invalid_value;
            }
            for (auto& [key, value] : io::read_key_values(is)) {
                std::string k = key;
                if (k != "T" && k != "R") {
                    std::replace(k.begin(), k.end(), '_', '-');
                }
                values[k] = value;
            }
        }
        for (const auto& key : option_keys) {
            if (options.at(std::string(to_string(chosen->command)) + "/" + key)->count() > 0) {
                values[key] = raw[key];
            }
        }
        const RunConfig config = make_config(chosen->command, values);
        return run(config, out, err);
    } catch (const divisibility_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::divisibility;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_value;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::invalid_value;
    }
}

} // namespace fsde::cli
