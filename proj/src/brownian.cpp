#include "fsde/brownian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fsde {

namespace {

constexpr double two_pow_minus_53 = 0x1.0p-53;

} // namespace

NormalSampler::NormalSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double NormalSampler::operator()() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = static_cast<double>((engine_() >> 11) + 1) * two_pow_minus_53;
    const double u2 = static_cast<double>(engine_() >> 11) * two_pow_minus_53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(mix64(master) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

BrownianPath::BrownianPath(double t0, double dt, std::vector<double> increments, std::uint64_t seed)
    : t0_(t0), dt_(dt), increments_(std::move(increments)), seed_(seed) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw domain_error("brownian path: dt must be positive and finite");
    }
    if (!std::isfinite(t0)) {
        throw domain_error("brownian path: t0 must be finite");
    }
    if (increments_.empty()) {
        throw domain_error("brownian path: at least one increment is required");
    }
}

BrownianPath generate_path(double t0, double dt, std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw domain_error("generate_path: n must be >= 1");
    }
    if (!(dt > 0.0)) {
        throw domain_error("generate_path: dt must be > 0");
    }
    NormalSampler sampler(seed);
    const double scale = std::sqrt(dt);
    std::vector<double> increments(n);
    for (auto& dw : increments) {
        dw = sampler() * scale;
    }
    return BrownianPath(t0, dt, std::move(increments), seed);
}

BrownianPath coarsen(const BrownianPath& path, std::size_t R) {
    if (R == 0 || path.size() % R != 0) {
        std::ostringstream msg;
        msg << "coarsen: R = " << R << " does not divide the " << path.size()
            << " fine increments";
        throw divisibility_error(msg.str());
    }
    if (R == 1) {
        return path;
    }
    const auto fine = path.increments();
    std::vector<double> coarse(fine.size() / R);
    for (std::size_t j = 0; j < coarse.size(); ++j) {
        double sum = 0.0;
        for (std::size_t i = j * R; i < (j + 1) * R; ++i) {
            sum += fine[i];
        }
        coarse[j] = sum;
    }
    return BrownianPath(path.t0(), static_cast<double>(R) * path.dt(), std::move(coarse),
                        path.seed());
}

std::vector<TimePoint> cumulative(const BrownianPath& path) {
    std::vector<TimePoint> out;
    out.reserve(path.size() + 1);
    double w = 0.0;
    out.push_back({path.t0(), w});
    const auto inc = path.increments();
    for (std::size_t k = 0; k < inc.size(); ++k) {
        w += inc[k];
        out.push_back({path.time(k + 1), w});
    }
    return out;
}

} // namespace fsde
