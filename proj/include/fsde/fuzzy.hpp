#pragma once

#include <iosfwd>

#include "fsde/error.hpp"

namespace fsde {

/// Triangular fuzzy number (left, peak, right) with piecewise-linear
/// membership peaking at `peak`. Construction rejects unordered triples;
/// left == peak == right is a crisp scalar.
class TriangularFuzzyNumber {
public:
    TriangularFuzzyNumber(double left, double peak, double right);

    static TriangularFuzzyNumber crisp(double value) { return {value, value, value}; }

    double left() const noexcept { return left_; }
    double peak() const noexcept { return peak_; }
    double right() const noexcept { return right_; }

    bool is_crisp() const noexcept { return left_ == peak_ && peak_ == right_; }

    friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

private:
    double left_;
    double peak_;
    double right_;
};

std::ostream& operator<<(std::ostream& os, const TriangularFuzzyNumber& f);

/// Closed interval [lo, hi] tagged with the membership level it was cut at.
/// Binary operations require both operands to carry the same alpha.
class AlphaInterval {
public:
    AlphaInterval(double lo, double hi, double alpha);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double alpha() const noexcept { return alpha_; }
    double width() const noexcept { return hi_ - lo_; }

    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    bool contains(const AlphaInterval& other) const noexcept {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }

    friend bool operator==(const AlphaInterval&, const AlphaInterval&) = default;

private:
    double lo_;
    double hi_;
    double alpha_;
};

std::ostream& operator<<(std::ostream& os, const AlphaInterval& x);

/// [left + (peak-left)*alpha, right - (right-peak)*alpha]. Throws domain_error
/// when alpha is outside [0, 1].
AlphaInterval alpha_cut(const TriangularFuzzyNumber& f, double alpha);

/// Membership grade of x; 1 at the peak, 0 outside (left, right).
double membership(const TriangularFuzzyNumber& f, double x) noexcept;

// Limit-method arithmetic. Each rule evaluates the operation on two corner
// pairs only and returns their [min, max]:
//   add: (lo+lo, hi+hi)      sub: (lo-hi, hi-lo)
//   mul: (lo*lo, hi*hi)      div: (lo/hi, hi/lo)
// mul and div therefore differ from classical interval arithmetic when the
// operands straddle zero; that is intended.
AlphaInterval interval_add(const AlphaInterval& x, const AlphaInterval& y);
AlphaInterval interval_sub(const AlphaInterval& x, const AlphaInterval& y);
AlphaInterval interval_mul(const AlphaInterval& x, const AlphaInterval& y);
/// Throws division_by_zero_interval when 0 lies in [y.lo, y.hi].
AlphaInterval interval_div(const AlphaInterval& x, const AlphaInterval& y);

inline AlphaInterval operator+(const AlphaInterval& x, const AlphaInterval& y) { return interval_add(x, y); }
inline AlphaInterval operator-(const AlphaInterval& x, const AlphaInterval& y) { return interval_sub(x, y); }
inline AlphaInterval operator*(const AlphaInterval& x, const AlphaInterval& y) { return interval_mul(x, y); }
inline AlphaInterval operator/(const AlphaInterval& x, const AlphaInterval& y) { return interval_div(x, y); }

/// Point of the interval parameterized by t in [1, inf): hi - (hi - lo)/t.
/// t = 1 gives lo and t = +inf gives hi.
double limit_point(const AlphaInterval& x, double t);

} // namespace fsde
