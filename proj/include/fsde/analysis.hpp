#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fsde/solvers.hpp"

namespace fsde {

struct ConvergenceEntry {
    std::size_t R = 1;
    double dt = 0.0;
    double endpoint_error = 0.0;
};

/// Mean strong endpoint error per step size, sorted by decreasing dt.
struct ConvergenceReport {
    std::vector<ConvergenceEntry> entries;
    std::size_t ensemble_size = 0;
    std::uint64_t first_seed = 0;
    std::string model;
};

struct AlphaSweepRow {
    double alpha = 0.0;
    double lower_T = 0.0;
    double upper_T = 0.0;
};

/// Terminal lower/upper bounds per membership level (alphas strictly increasing).
struct AlphaSweep {
    std::vector<AlphaSweepRow> rows;
};

struct CrossingReport {
    std::size_t count = 0;
    double fraction = 0.0;
};

/// |approx(T) - exact(T)|. Throws domain_error when the two final times differ
/// by more than 1e-9 relative.
double endpoint_error(const Trajectory& approx, std::span<const TimePoint> exact);

/// For each R: mean over seeds of the endpoint error of EM at step R*fine_dt
/// against exact_gbm on the same fine path over [0, horizon]. Seeds are
/// processed in parallel; the per-R mean is a compensated sum taken in seed
/// order, so the result does not depend on scheduling.
ConvergenceReport convergence_study(const GbmParams& p, double horizon, double fine_dt,
                                    std::span<const std::size_t> Rs,
                                    std::span<const std::uint64_t> seeds);

/// Least-squares slope of log(endpoint_error) against log(dt).
double loglog_slope(const ConvergenceReport& report);

/// Signed upper - lower per grid point (negative where the bounds cross).
std::vector<TimePoint> band_width(const FuzzyTrajectory& ft);

/// Number of crossed grid points and their share of the time steps
/// (times.size() - 1; index 0 is the initial condition).
CrossingReport crossing_report(const FuzzyTrajectory& ft);

AlphaSweep alpha_sweep(const FuzzyModelParams& fp, const BrownianPath& path, std::size_t R,
                       std::span<const double> alphas);

/// 0.0, 0.1, ..., 1.0
std::vector<double> default_alpha_grid();

/// Neumaier-compensated sum, in the given order.
double compensated_sum(std::span<const double> values) noexcept;

} // namespace fsde
