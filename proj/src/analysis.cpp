#include "fsde/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace fsde {

double compensated_sum(std::span<const double> values) noexcept {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

double endpoint_error(const Trajectory& approx, std::span<const TimePoint> exact) {
    if (approx.times.empty() || exact.empty()) {
        throw domain_error("endpoint_error: empty trajectory");
    }
    const double t_approx = approx.times.back();
    const double t_exact = exact.back().t;
    if (std::abs(t_approx - t_exact) > 1e-9 * std::max(1.0, std::abs(t_exact))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "endpoint_error: horizons differ (" << t_approx << " vs " << t_exact << ')';
        throw domain_error(msg.str());
    }
    return std::abs(approx.values.back() - exact.back().value);
}

ConvergenceReport convergence_study(const GbmParams& p, double horizon, double fine_dt,
                                    std::span<const std::size_t> Rs,
                                    std::span<const std::uint64_t> seeds) {
    if (!(horizon > 0.0) || !(fine_dt > 0.0)) {
        throw domain_error("convergence_study: horizon and fine dt must be positive");
    }
    if (Rs.empty() || seeds.empty()) {
        throw domain_error("convergence_study: need at least one R and one seed");
    }
    const double steps = horizon / fine_dt;
    const auto n = static_cast<std::size_t>(std::llround(steps));
    if (n == 0 || std::abs(steps - static_cast<double>(n)) > 1e-9 * steps) {
        throw divisibility_error("convergence_study: horizon is not a whole number of fine steps");
    }
    for (std::size_t R : Rs) {
        if (R == 0 || n % R != 0) {
            std::ostringstream msg;
            msg << "convergence_study: R = " << R << " does not divide " << n << " fine steps";
            throw divisibility_error(msg.str());
        }
    }

    const SdeModel model = gbm_model(p);
    // errors[r * seeds.size() + s]
    std::vector<double> errors(Rs.size() * seeds.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t s = next++; s < seeds.size(); s = next++) {
            try {
                const BrownianPath path = generate_path(0.0, fine_dt, n, seeds[s]);
                const auto exact = exact_gbm(p, path);
                for (std::size_t r = 0; r < Rs.size(); ++r) {
                    errors[r * seeds.size() + s] =
                        endpoint_error(euler_maruyama(model, path, Rs[r]), exact);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, seeds.size());
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ConvergenceReport report;
    report.ensemble_size = seeds.size();
    report.first_seed = seeds.front();
    report.model = model.description;
    for (std::size_t r = 0; r < Rs.size(); ++r) {
        const std::span<const double> column(errors.data() + r * seeds.size(), seeds.size());
        report.entries.push_back({Rs[r], static_cast<double>(Rs[r]) * fine_dt,
                                  compensated_sum(column) / static_cast<double>(seeds.size())});
    }
    std::stable_sort(report.entries.begin(), report.entries.end(),
                     [](const auto& a, const auto& b) { return a.dt > b.dt; });
    return report;
}

double loglog_slope(const ConvergenceReport& report) {
    const auto& e = report.entries;
    if (e.size() < 2) {
        throw domain_error("loglog_slope: need at least two entries");
    }
    double mx = 0.0;
    double my = 0.0;
    for (const auto& entry : e) {
        if (!(entry.endpoint_error > 0.0)) {
            throw domain_error("loglog_slope: errors must be positive");
        }
        mx += std::log(entry.dt);
        my += std::log(entry.endpoint_error);
    }
    mx /= static_cast<double>(e.size());
    my /= static_cast<double>(e.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& entry : e) {
        const double dx = std::log(entry.dt) - mx;
        sxy += dx * (std::log(entry.endpoint_error) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) {
        throw domain_error("loglog_slope: step sizes must differ");
    }
    return sxy / sxx;
}

std::vector<TimePoint> band_width(const FuzzyTrajectory& ft) {
    std::vector<TimePoint> out(ft.times.size());
    for (std::size_t i = 0; i < ft.times.size(); ++i) {
        out[i] = {ft.times[i], ft.upper[i] - ft.lower[i]};
    }
    return out;
}

CrossingReport crossing_report(const FuzzyTrajectory& ft) {
    const std::size_t count = find_crossings(ft.lower, ft.upper).size();
    const std::size_t steps = ft.times.empty() ? 0 : ft.times.size() - 1;
    return {count, steps == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(steps)};
}

AlphaSweep alpha_sweep(const FuzzyModelParams& fp, const BrownianPath& path, std::size_t R,
                       std::span<const double> alphas) {
    if (alphas.empty()) {
        throw domain_error("alpha_sweep: no alpha levels given");
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] >= 0.0 && alphas[i] <= 1.0)) {
            throw domain_error("alpha_sweep: alpha levels must lie in [0, 1]");
        }
        if (i > 0 && !(alphas[i] > alphas[i - 1])) {
            throw domain_error("alpha_sweep: alpha levels must be strictly increasing");
        }
    }
    AlphaSweep sweep;
    sweep.rows.reserve(alphas.size());
    for (double alpha : alphas) {
        const FuzzyTrajectory ft = fuzzy_euler_maruyama(fp, path, R, alpha);
        sweep.rows.push_back({alpha, ft.lower.back(), ft.upper.back()});
    }
    return sweep;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid(11);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        grid[k] = static_cast<double>(k) / 10.0;
    }
    return grid;
}

} // namespace fsde
