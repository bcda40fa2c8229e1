#ifndef MLREACH_INTERVAL_HPP
#define MLREACH_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <string>

#include "mlreach/detail/directed.hpp"
#include "mlreach/errors.hpp"

namespace mlreach {

// Closed real interval [lo, hi] with outward-rounded endpoints.
// Invariants: lo <= hi, endpoints never NaN. Infinite endpoints are legal
// carriers (they appear transiently in special-function tail bounds) but the
// higher layers reject non-finite data at their boundaries.
struct Interval {
    double lo;
    double hi;

    Interval() : lo(0.0), hi(0.0) {}

    explicit Interval(double v) : lo(v), hi(v) {
        if (std::isnan(v)) throw DomainError("Interval: NaN endpoint");
    }

    Interval(double l, double h) : lo(l), hi(h) {
        if (std::isnan(l) || std::isnan(h)) throw DomainError("Interval: NaN endpoint");
        if (l > h) throw DomainError("Interval: lo > hi");
    }

    // Internal fast path for endpoints already known to be ordered.
    static Interval unchecked(double l, double h) {
        Interval r;
        r.lo = l;
        r.hi = h;
        return r;
    }

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool is_point() const { return lo == hi; }
    bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

    std::string str() const;
};

inline Interval operator-(Interval a) { return Interval::unchecked(-a.hi, -a.lo); }

inline Interval operator+(Interval a, Interval b) {
    return Interval::unchecked(detail::add_down(a.lo, b.lo), detail::add_up(a.hi, b.hi));
}

inline Interval operator-(Interval a, Interval b) {
    return Interval::unchecked(detail::sub_down(a.lo, b.hi), detail::sub_up(a.hi, b.lo));
}

inline Interval operator*(Interval a, Interval b) {
    using namespace detail;
    const double lo = std::min(std::min(mul_down(a.lo, b.lo), mul_down(a.lo, b.hi)),
                               std::min(mul_down(a.hi, b.lo), mul_down(a.hi, b.hi)));
    const double hi = std::max(std::max(mul_up(a.lo, b.lo), mul_up(a.lo, b.hi)),
                               std::max(mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)));
    return Interval::unchecked(lo, hi);
}

inline Interval operator/(Interval a, Interval b) {
    if (b.contains_zero())
        throw DivisionByZeroInterval("interval division: denominator contains zero");
    using namespace detail;
    const double lo = std::min(std::min(div_down(a.lo, b.lo), div_down(a.lo, b.hi)),
                               std::min(div_down(a.hi, b.lo), div_down(a.hi, b.hi)));
    const double hi = std::max(std::max(div_up(a.lo, b.lo), div_up(a.lo, b.hi)),
                               std::max(div_up(a.hi, b.lo), div_up(a.hi, b.hi)));
    return Interval::unchecked(lo, hi);
}

inline Interval operator+(Interval a, double b) { return a + Interval(b); }
inline Interval operator+(double a, Interval b) { return Interval(a) + b; }
inline Interval operator-(Interval a, double b) { return a - Interval(b); }
inline Interval operator-(double a, Interval b) { return Interval(a) - b; }
inline Interval operator*(Interval a, double b) { return a * Interval(b); }
inline Interval operator*(double a, Interval b) { return Interval(a) * b; }
inline Interval operator/(Interval a, double b) { return a / Interval(b); }
inline Interval operator/(double a, Interval b) { return Interval(a) / b; }

inline Interval intersect(Interval a, Interval b) {
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo > hi) throw EmptyIntersection("intersect: disjoint intervals");
    return Interval::unchecked(lo, hi); // exact, no rounding involved
}

inline Interval hull(Interval a, Interval b) {
    return Interval::unchecked(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline double midpoint(Interval a) { return 0.5 * (a.lo + a.hi); }

inline double width(Interval a) { return detail::sub_up(a.hi, a.lo); }

// sup |a| over the interval.
inline double mag(Interval a) { return std::max(std::fabs(a.lo), std::fabs(a.hi)); }

inline bool subset_of(Interval a, Interval b) { return b.lo <= a.lo && a.hi <= b.hi; }

inline Interval inflate_sym(Interval a, double mu) {
    if (std::isnan(mu) || mu < 0.0) throw NegativeInflation("inflate_sym: negative radius");
    if (mu == 0.0) return a;
    return Interval::unchecked(detail::sub_down(a.lo, mu), detail::add_up(a.hi, mu));
}

// Relative-plus-absolute inflation used to seed subset iterations.
inline Interval inflate_rel_abs(Interval a, double rel, double abs) {
    const double r = rel * mag(a) + abs;
    return inflate_sym(a, r);
}

// Tight interval square (even-power rule: [-1,1]^2 = [0,1]).
inline Interval sqr(Interval a) {
    using namespace detail;
    if (a.lo >= 0.0) return Interval::unchecked(mul_down(a.lo, a.lo), mul_up(a.hi, a.hi));
    if (a.hi <= 0.0) return Interval::unchecked(mul_down(a.hi, a.hi), mul_up(a.lo, a.lo));
    const double m = std::max(mul_up(a.lo, a.lo), mul_up(a.hi, a.hi));
    return Interval::unchecked(0.0, m);
}

// exp over an interval; monotone, endpoints correctly rounded outward.
inline Interval exp_iv(Interval a) {
    return Interval::unchecked(detail::exp_dir(a.lo, MPFR_RNDD), detail::exp_dir(a.hi, MPFR_RNDU));
}

// Encloses {x^y : x in t, y in nu} for t.lo >= 0 and nu inside (0, 1].
// x^y is increasing in x on x >= 0; monotone in y with direction depending on
// whether x is below or above 1, so the extrema sit at the four corners.
// 0^y = 0 for y > 0.
inline Interval pow_real(Interval t, Interval nu) {
    if (std::isnan(t.lo) || t.lo < 0.0)
        throw DomainError("pow_real: negative base");
    if (!(nu.lo > 0.0) || nu.hi > 1.0)
        throw DomainError("pow_real: exponent interval not inside (0, 1]");
    using namespace detail;

    double lo;
    if (t.lo == 0.0) {
        lo = 0.0;
    } else {
        lo = std::min(pow_dir(t.lo, nu.lo, MPFR_RNDD), pow_dir(t.lo, nu.hi, MPFR_RNDD));
    }
    double hi;
    if (t.hi == 0.0) {
        hi = 0.0;
    } else {
        hi = std::max(pow_dir(t.hi, nu.lo, MPFR_RNDU), pow_dir(t.hi, nu.hi, MPFR_RNDU));
    }
    return Interval::unchecked(lo, hi);
}

inline std::string Interval::str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", lo, hi);
    return buf;
}

} // namespace mlreach

#endif
