#include "fsde/solvers.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace fsde {

namespace {

void check_alpha(double alpha, const char* who) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw domain_error(std::string(who) + ": alpha must lie in [0, 1]");
    }
}

Trajectory run_corner(const CrispParams& p, const BrownianPath& path, std::size_t R) {
    return euler_maruyama(make_model(p), path, R);
}

void merge_warnings(std::vector<std::string>& into, const std::vector<std::string>& from) {
    for (const auto& w : from) {
        if (std::find(into.begin(), into.end(), w) == into.end()) {
            into.push_back(w);
        }
    }
}

std::string fuzzy_description(const FuzzyModelParams& fp, const char* method) {
    std::ostringstream os;
    os.precision(17);
    os << method << ' ' << to_string(fp.kind()) << "(mu=" << fp.mu() << ", sigma=" << fp.sigma()
       << ", x0=" << fp.x0() << ')';
    return os.str();
}

} // namespace

Trajectory euler_maruyama(const SdeModel& model, const BrownianPath& path, std::size_t R) {
    const BrownianPath coarse = coarsen(path, R);
    const auto dW = coarse.increments();
    const double dt = coarse.dt();

    Trajectory traj;
    traj.times.resize(dW.size() + 1);
    traj.values.resize(dW.size() + 1);
    traj.times[0] = coarse.t0();
    traj.values[0] = model.x0;
    double w = model.x0;
    for (std::size_t i = 0; i < dW.size(); ++i) {
        const double t = coarse.time(i);
        w = w + model.drift(t, w) * dt + model.diffusion(t, w) * dW[i];
        traj.times[i + 1] = coarse.time(i + 1);
        traj.values[i + 1] = w;
    }
    traj.meta = {path.seed(), dt, R, model.description, model.warnings};
    if (model.stiffness * dt >= 1.0) {
        std::ostringstream msg;
        msg << model.description << ": stiffness * dt = " << model.stiffness * dt
            << " >= 1, explicit Euler-Maruyama is unstable";
        traj.meta.warnings.push_back(msg.str());
    }
    return traj;
}

std::vector<std::size_t> find_crossings(const std::vector<double>& lower,
                                        const std::vector<double>& upper) {
    std::vector<std::size_t> out;
    const std::size_t n = std::min(lower.size(), upper.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (lower[i] > upper[i]) {
            out.push_back(i);
        }
    }
    return out;
}

FuzzyTrajectory fuzzy_euler_maruyama(const FuzzyModelParams& fp, const BrownianPath& path,
                                     std::size_t R, double alpha) {
    check_alpha(alpha, "fuzzy_euler_maruyama");
    Trajectory lo = run_corner(corner_parameters(fp, alpha, Side::lower), path, R);
    Trajectory hi = run_corner(corner_parameters(fp, alpha, Side::upper), path, R);

    FuzzyTrajectory ft;
    ft.times = std::move(lo.times);
    ft.lower = std::move(lo.values);
    ft.upper = std::move(hi.values);
    ft.alpha = alpha;
    ft.crossings = find_crossings(ft.lower, ft.upper);
    ft.meta = {path.seed(), lo.meta.dt, R, fuzzy_description(fp, "limit-method"), {}};
    merge_warnings(ft.meta.warnings, lo.meta.warnings);
    merge_warnings(ft.meta.warnings, hi.meta.warnings);
    return ft;
}

FuzzyTrajectory vertex_envelope(const FuzzyModelParams& fp, const BrownianPath& path,
                                std::size_t R, double alpha) {
    check_alpha(alpha, "vertex_envelope");
    const AlphaInterval mu = alpha_cut(fp.mu(), alpha);
    const AlphaInterval sigma = alpha_cut(fp.sigma(), alpha);
    const AlphaInterval x0 = alpha_cut(fp.x0(), alpha);

    FuzzyTrajectory ft;
    ft.alpha = alpha;
    ft.meta.R = R;
    ft.meta.seed = path.seed();
    ft.meta.model = fuzzy_description(fp, "vertex-envelope");
    for (unsigned corner = 0; corner < 8; ++corner) {
        const CrispParams p{fp.kind(), (corner & 1U) ? mu.hi() : mu.lo(),
                            (corner & 2U) ? sigma.hi() : sigma.lo(),
                            (corner & 4U) ? x0.hi() : x0.lo()};
        Trajectory run = run_corner(p, path, R);
        merge_warnings(ft.meta.warnings, run.meta.warnings);
        if (corner == 0) {
            ft.times = std::move(run.times);
            ft.lower = run.values;
            ft.upper = std::move(run.values);
            ft.meta.dt = run.meta.dt;
            continue;
        }
        for (std::size_t i = 0; i < run.values.size(); ++i) {
            ft.lower[i] = std::min(ft.lower[i], run.values[i]);
            ft.upper[i] = std::max(ft.upper[i], run.values[i]);
        }
    }
    return ft;
}

} // namespace fsde
