#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fsde/error.hpp"

namespace fsde {

/// Standard-normal variates from a seeded 64-bit Mersenne Twister
/// (std::mt19937_64, whose output sequence is fixed by the C++ standard)
/// transformed with the basic Box-Muller method:
///
///   u1 = ((x1 >> 11) + 1) * 2^-53      in (0, 1]
///   u2 =  (x2 >> 11)      * 2^-53      in [0, 1)
///   z0 = sqrt(-2 ln u1) * cos(2 pi u2), z1 = sqrt(-2 ln u1) * sin(2 pi u2)
///
/// z0 is returned first, z1 is cached for the next call. This transform is
/// part of the output format; changing it changes every emitted file.
///
/// Not thread-safe; give each worker its own sampler.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed);

    double operator()();

    std::uint64_t seed() const noexcept { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of ensemble member `index` under `master`. Depends only on the pair,
/// so members can be generated in any order or in parallel.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// One sample of a time series: W(t) for paths, X(t) for solutions.
struct TimePoint {
    double t;
    double value;
};

/// Wiener increments on a uniform grid t0, t0 + dt, ..., t0 + n*dt.
/// increments()[i] is W(t_{i+1}) - W(t_i); W(t0) = 0.
class BrownianPath {
public:
    BrownianPath(double t0, double dt, std::vector<double> increments, std::uint64_t seed = 0);

    double t0() const noexcept { return t0_; }
    double dt() const noexcept { return dt_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t size() const noexcept { return increments_.size(); }
    std::span<const double> increments() const noexcept { return increments_; }

    /// t0 + k*dt, by multiplication.
    double time(std::size_t k) const noexcept { return t0_ + static_cast<double>(k) * dt_; }
    double horizon() const noexcept { return time(size()); }

private:
    double t0_;
    double dt_;
    std::vector<double> increments_;
    std::uint64_t seed_;
};

/// increments[i] = z_i * sqrt(dt), z_i drawn in index order from
/// NormalSampler(seed). Throws domain_error for n == 0 or dt <= 0.
BrownianPath generate_path(double t0, double dt, std::size_t n, std::uint64_t seed);

/// Coarse path with step R*dt whose increment j is the left-to-right sum of
/// fine increments jR .. jR+R-1. Throws divisibility_error unless R >= 1 and
/// R divides path.size().
BrownianPath coarsen(const BrownianPath& path, std::size_t R);

/// (t_k, W(t_k)) for k = 0..n, W accumulated left to right from W(t0) = 0.
std::vector<TimePoint> cumulative(const BrownianPath& path);

} // namespace fsde
