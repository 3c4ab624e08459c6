#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fsde/brownian.hpp"
#include "fsde/fuzzy.hpp"

namespace fsde {

using Coefficient = std::function<double(double t, double x)>;

/// dX = drift(t, X) dt + diffusion(t, X) dW,  X(t0) = x0.
struct SdeModel {
    Coefficient drift;
    Coefficient diffusion;
    double x0 = 0.0;
    // Contraction rate of the drift (mu for Langevin, 0 otherwise); explicit
    // EM is flagged unstable once stiffness * dt >= 1.
    double stiffness = 0.0;
    std::string description;
    // Non-fatal concerns found while building the model (e.g. negative volatility).
    std::vector<std::string> warnings;
};

enum class ModelKind { gbm, langevin };

std::string_view to_string(ModelKind kind) noexcept;
/// Accepts "gbm" (alias "black-scholes") and "langevin" (alias "ou").
ModelKind parse_model_kind(std::string_view text);

/// Geometric Brownian motion dX = mu X dt + sigma X dW.
struct GbmParams {
    double mu = 0.0;
    double sigma = 0.0;
    double x0 = 1.0;
};

/// Langevin / Ornstein-Uhlenbeck dX = -mu X dt + sigma dW.
struct LangevinParams {
    double mu = 1.0;
    double sigma = 1.0;
    double x0 = 1.0;
};

/// Scalar parameter set of either model kind.
struct CrispParams {
    ModelKind kind = ModelKind::gbm;
    double mu = 0.0;
    double sigma = 0.0;
    double x0 = 1.0;
};

/// Fuzzy parameters; a crisp x0 is a degenerate TFN. For Langevin the
/// support of mu and sigma must be strictly positive.
class FuzzyModelParams {
public:
    FuzzyModelParams(ModelKind kind, TriangularFuzzyNumber mu, TriangularFuzzyNumber sigma,
                     TriangularFuzzyNumber x0);

    ModelKind kind() const noexcept { return kind_; }
    const TriangularFuzzyNumber& mu() const noexcept { return mu_; }
    const TriangularFuzzyNumber& sigma() const noexcept { return sigma_; }
    const TriangularFuzzyNumber& x0() const noexcept { return x0_; }

    /// Parameters at the TFN peaks.
    CrispParams peak() const noexcept;

private:
    ModelKind kind_;
    TriangularFuzzyNumber mu_;
    TriangularFuzzyNumber sigma_;
    TriangularFuzzyNumber x0_;
};

enum class Side { lower, upper };

SdeModel gbm_model(const GbmParams& p);
/// Throws domain_error unless mu > 0 and sigma > 0.
SdeModel langevin_model(const LangevinParams& p);
SdeModel make_model(const CrispParams& p);

/// Closed-form GBM solution on the path's fine grid:
///   X(t_k) = x0 exp((mu - sigma^2/2)(t_k - t0) + sigma W(t_k)).
/// Requires x0 > 0.
std::vector<TimePoint> exact_gbm(const GbmParams& p, const BrownianPath& path);

/// Left-point discretized OU convolution on the fine grid, driven by the same
/// increments as an EM run:
///   X(t_k) = x0 e^{-mu (t_k - t0)} + sigma * sum_{i<k} e^{-mu (t_k - t_i)} dW_i
/// Converges to the pathwise solution as dt -> 0; it is not exact at finite dt.
/// Any finite mu, sigma are accepted (sigma = 0 gives pure decay).
std::vector<TimePoint> exact_ou(const LangevinParams& p, const BrownianPath& path);

/// Each parameter replaced by the lower (resp. upper) end of its alpha-cut.
CrispParams corner_parameters(const FuzzyModelParams& fp, double alpha, Side side);

/// Crisp model at corner_parameters(fp, alpha, side).
SdeModel corner_model(const FuzzyModelParams& fp, double alpha, Side side);

} // namespace fsde
