#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fsde/brownian.hpp"
#include "fsde/models.hpp"

namespace fsde {

struct RunMeta {
    std::uint64_t seed = 0;
    double dt = 0.0; // coarse step actually used, R * fine dt
    std::size_t R = 1;
    std::string model;
    std::vector<std::string> warnings;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<double> values;
    RunMeta meta;
};

/// Lower/upper bound runs at one membership level. Unlike an interval, lower
/// may exceed upper at some steps; those indices are listed in `crossings`.
struct FuzzyTrajectory {
    std::vector<double> times;
    std::vector<double> lower;
    std::vector<double> upper;
    double alpha = 1.0;
    std::vector<std::size_t> crossings;
    RunMeta meta;
};

/// Explicit Euler-Maruyama on the path coarsened by R:
///   w_0 = x0,  w_{i+1} = w_i + a(t_i, w_i) dt + b(t_i, w_i) dW_i
/// with dt = R * path.dt() and t_i = t0 + i * dt.
/// Throws divisibility_error when R does not divide path.size().
Trajectory euler_maruyama(const SdeModel& model, const BrownianPath& path, std::size_t R);

/// Two crisp runs on the same path: all parameters at the lower ends of their
/// alpha-cuts, and all at the upper ends. No reordering is applied, so the
/// bounds can cross.
FuzzyTrajectory fuzzy_euler_maruyama(const FuzzyModelParams& fp, const BrownianPath& path,
                                     std::size_t R, double alpha);

/// Pointwise min/max over the runs at every corner of the parameter box
/// (2^3 runs for mu, sigma, x0). Always ordered; crossings is empty.
FuzzyTrajectory vertex_envelope(const FuzzyModelParams& fp, const BrownianPath& path,
                                std::size_t R, double alpha);

/// Indices i with lower[i] > upper[i].
std::vector<std::size_t> find_crossings(const std::vector<double>& lower,
                                        const std::vector<double>& upper);

} // namespace fsde
