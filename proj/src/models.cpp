#include "fsde/models.hpp"

#include <cmath>
#include <sstream>

namespace fsde {

namespace {

std::string describe(std::string_view name, double mu, double sigma, double x0) {
    std::ostringstream os;
    os.precision(17);
    os << name << "(mu=" << mu << ", sigma=" << sigma << ", x0=" << x0 << ')';
    return os.str();
}

void require_finite(double mu, double sigma, double x0, const char* who) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || !std::isfinite(x0)) {
        throw domain_error(std::string(who) + ": parameters must be finite");
    }
}

} // namespace

std::string_view to_string(ModelKind kind) noexcept {
    switch (kind) {
    case ModelKind::gbm:
        return "gbm";
    case ModelKind::langevin:
        return "langevin";
    }
    return "unknown";
}

ModelKind parse_model_kind(std::string_view text) {
    if (text == "gbm" || text == "black-scholes") {
        return ModelKind::gbm;
    }
    if (text == "langevin" || text == "ou") {
        return ModelKind::langevin;
    }
    throw parse_error("unknown model '" + std::string(text) + "' (expected gbm or langevin)");
}

FuzzyModelParams::FuzzyModelParams(ModelKind kind, TriangularFuzzyNumber mu,
                                   TriangularFuzzyNumber sigma, TriangularFuzzyNumber x0)
    : kind_(kind), mu_(mu), sigma_(sigma), x0_(x0) {
    if (kind_ == ModelKind::langevin) {
        if (!(mu_.left() > 0.0)) {
            throw domain_error("langevin: fuzzy mu must have a strictly positive support");
        }
        if (!(sigma_.left() > 0.0)) {
            throw domain_error("langevin: fuzzy sigma must have a strictly positive support");
        }
    }
}

CrispParams FuzzyModelParams::peak() const noexcept {
    return {kind_, mu_.peak(), sigma_.peak(), x0_.peak()};
}

SdeModel gbm_model(const GbmParams& p) {
    require_finite(p.mu, p.sigma, p.x0, "gbm_model");
    SdeModel m;
    const double mu = p.mu;
    const double sigma = p.sigma;
    m.drift = [mu](double, double x) { return mu * x; };
    m.diffusion = [sigma](double, double x) { return sigma * x; };
    m.x0 = p.x0;
    m.description = describe("gbm", p.mu, p.sigma, p.x0);
    if (p.sigma < 0.0) {
        m.warnings.push_back("gbm: negative volatility " + std::to_string(p.sigma));
    }
    return m;
}

SdeModel langevin_model(const LangevinParams& p) {
    require_finite(p.mu, p.sigma, p.x0, "langevin_model");
    if (!(p.mu > 0.0) || !(p.sigma > 0.0)) {
        throw domain_error("langevin_model: mu and sigma must be positive");
    }
    SdeModel m;
    const double mu = p.mu;
    const double sigma = p.sigma;
    m.drift = [mu](double, double x) { return -mu * x; };
    m.diffusion = [sigma](double, double) { return sigma; };
    m.x0 = p.x0;
    m.stiffness = p.mu;
    m.description = describe("langevin", p.mu, p.sigma, p.x0);
    return m;
}

SdeModel make_model(const CrispParams& p) {
    switch (p.kind) {
    case ModelKind::gbm:
        return gbm_model({p.mu, p.sigma, p.x0});
    case ModelKind::langevin:
        return langevin_model({p.mu, p.sigma, p.x0});
    }
    throw domain_error("make_model: unknown model kind");
}

std::vector<TimePoint> exact_gbm(const GbmParams& p, const BrownianPath& path) {
    if (!(p.x0 > 0.0)) {
        throw domain_error("exact_gbm: x0 must be > 0");
    }
    const double growth = p.mu - 0.5 * p.sigma * p.sigma;
    auto out = cumulative(path);
    for (auto& point : out) {
        point.value = p.x0 * std::exp(growth * (point.t - path.t0()) + p.sigma * point.value);
    }
    return out;
}

std::vector<TimePoint> exact_ou(const LangevinParams& p, const BrownianPath& path) {
    require_finite(p.mu, p.sigma, p.x0, "exact_ou");
    const auto inc = path.increments();
    std::vector<TimePoint> out;
    out.reserve(inc.size() + 1);
    out.push_back({path.t0(), p.x0});
    // conv_k = sum_{i<k} e^{-mu (k-i) dt} dW_i, accumulated as
    // conv_{k+1} = e^{-mu dt} (conv_k + dW_k).
    const double decay = std::exp(-p.mu * path.dt());
    double conv = 0.0;
    for (std::size_t k = 0; k < inc.size(); ++k) {
        conv = decay * (conv + inc[k]);
        const double t = path.time(k + 1);
        out.push_back({t, p.x0 * std::exp(-p.mu * (t - path.t0())) + p.sigma * conv});
    }
    return out;
}

CrispParams corner_parameters(const FuzzyModelParams& fp, double alpha, Side side) {
    const auto pick = [&](const TriangularFuzzyNumber& f) {
        const AlphaInterval cut = alpha_cut(f, alpha);
        return side == Side::lower ? cut.lo() : cut.hi();
    };
    return {fp.kind(), pick(fp.mu()), pick(fp.sigma()), pick(fp.x0())};
}

SdeModel corner_model(const FuzzyModelParams& fp, double alpha, Side side) {
    return make_model(corner_parameters(fp, alpha, side));
}

} // namespace fsde
