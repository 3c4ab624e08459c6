#include "fsde/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace fsde {

namespace {

void require_same_alpha(const AlphaInterval& x, const AlphaInterval& y, const char* op) {
    if (x.alpha() != y.alpha()) {
        std::ostringstream msg;
        msg << op << ": operands cut at different alpha levels (" << x.alpha() << " vs "
            << y.alpha() << ")";
        throw domain_error(msg.str());
    }
}

AlphaInterval from_corners(double a, double b, double alpha) {
    return {std::min(a, b), std::max(a, b), alpha};
}

} // namespace

TriangularFuzzyNumber::TriangularFuzzyNumber(double left, double peak, double right)
    : left_(left), peak_(peak), right_(right) {
    if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right)) {
        throw domain_error("triangular fuzzy number: components must be finite");
    }
    if (left > peak || peak > right) {
        std::ostringstream msg;
        msg << "triangular fuzzy number: expected left <= peak <= right, got (" << left << ", "
            << peak << ", " << right << ")";
        throw domain_error(msg.str());
    }
}

std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& f) {
    return os << '[' << f.left() << ", " << f.peak() << ", " << f.right() << ']';
}

AlphaInterval::AlphaInterval(double lo, double hi, double alpha) : lo_(lo), hi_(hi), alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw domain_error("alpha interval: alpha must lie in [0, 1]");
    }
    if (!(lo <= hi)) {
        std::ostringstream msg;
        msg << "alpha interval: lo > hi (" << lo << " > " << hi << ")";
        throw domain_error(msg.str());
    }
}

std::ostream& operator<<(std::ostream& os, const AlphaInterval& x) {
    return os << '[' << x.lo() << ", " << x.hi() << "]@" << x.alpha();
}

AlphaInterval alpha_cut(const TriangularFuzzyNumber& f, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        std::ostringstream msg;
        msg << "alpha_cut: alpha must lie in [0, 1], got " << alpha;
        throw domain_error(msg.str());
    }
    if (alpha == 1.0) {
        return {f.peak(), f.peak(), alpha};
    }
    // Clamped so rounding can never carry an end past the peak; both ends
    // stay monotone in alpha.
    const double lo = std::min(f.left() + (f.peak() - f.left()) * alpha, f.peak());
    const double hi = std::max(f.right() - (f.right() - f.peak()) * alpha, f.peak());
    return {lo, hi, alpha};
}

double membership(const TriangularFuzzyNumber& f, double x) noexcept {
    if (x == f.peak()) {
        return 1.0;
    }
    if (x <= f.left() || x >= f.right()) {
        return 0.0;
    }
    if (x < f.peak()) {
        return (x - f.left()) / (f.peak() - f.left());
    }
    return (f.right() - x) / (f.right() - f.peak());
}

AlphaInterval interval_add(const AlphaInterval& x, const AlphaInterval& y) {
    require_same_alpha(x, y, "interval_add");
    return from_corners(x.lo() + y.lo(), x.hi() + y.hi(), x.alpha());
}

AlphaInterval interval_sub(const AlphaInterval& x, const AlphaInterval& y) {
    require_same_alpha(x, y, "interval_sub");
    return from_corners(x.lo() - y.hi(), x.hi() - y.lo(), x.alpha());
}

AlphaInterval interval_mul(const AlphaInterval& x, const AlphaInterval& y) {
    require_same_alpha(x, y, "interval_mul");
    return from_corners(x.lo() * y.lo(), x.hi() * y.hi(), x.alpha());
}

AlphaInterval interval_div(const AlphaInterval& x, const AlphaInterval& y) {
    require_same_alpha(x, y, "interval_div");
    if (y.lo() <= 0.0 && 0.0 <= y.hi()) {
        throw division_by_zero_interval("interval_div: divisor interval contains zero");
    }
    return from_corners(x.lo() / y.hi(), x.hi() / y.lo(), x.alpha());
}

double limit_point(const AlphaInterval& x, double t) {
    if (!(t >= 1.0)) {
        throw domain_error("limit_point: parameter t must be >= 1");
    }
    return x.hi() - (x.hi() - x.lo()) / t;
}

} // namespace fsde
