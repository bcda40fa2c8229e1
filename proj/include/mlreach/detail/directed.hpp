#ifndef MLREACH_DETAIL_DIRECTED_HPP
#define MLREACH_DETAIL_DIRECTED_HPP

// Directed-rounding scalar kernels.
//
// Policy (single, library-wide): all arithmetic runs in the default
// round-to-nearest mode; directed results are recovered afterwards.
//  * add/sub/mul/div: the rounding error of the nearest-mode result is
//    obtained exactly through error-free transformations (TwoSum, FMA
//    residual), so the directed endpoint equals the true directed rounding.
//    Exact operations stay exact ([1,2]+[3,4] stays [4,6]).
//  * exp/pow/log/gamma: evaluated by MPFR at 53-bit precision with the
//    requested rounding direction, which is the correctly rounded directed
//    double by construction.
// Near the underflow threshold the FMA residual can lose its sign, so we
// fall back to a one-ulp outward nudge there. Overflowed endpoints saturate
// (lower bounds to DBL_MAX, upper bounds to +inf), which keeps containment.
// No rounding-mode switching anywhere: thread-safe by construction.

#include <cfloat>
#include <cmath>
#include <limits>

#include <mpfr.h>

namespace mlreach::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Magnitudes below this are handled with an unconditional nudge because the
// residual trick is only exact for non-underflowing products/quotients.
inline constexpr double kTinyGuard = 1e-290;

inline double next_down(double x) {
    if (x == -kInf) return x;
    return std::nextafter(x, -kInf);
}

inline double next_up(double x) {
    if (x == kInf) return x;
    return std::nextafter(x, kInf);
}

// TwoSum error term: a + b == s + err exactly (Knuth; valid for all finite
// inputs, additions never underflow inexactly).
inline double two_sum_err(double a, double b, double s) {
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

inline double add_down(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return s > 0 ? DBL_MAX : s; // +inf sum: true > DBL_MAX
    const double e = two_sum_err(a, b, s);
    return e < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
    const double s = a + b;
    if (!std::isfinite(s)) return s < 0 ? -DBL_MAX : s;
    const double e = two_sum_err(a, b, s);
    return e > 0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (!std::isfinite(p)) return p > 0 ? DBL_MAX : p;
    if (std::fabs(p) < kTinyGuard) return next_down(p);
    const double e = std::fma(a, b, -p); // a*b == p + e exactly (p not subnormal)
    return e < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
    if (a == 0.0 || b == 0.0) return 0.0;
    const double p = a * b;
    if (!std::isfinite(p)) return p < 0 ? -DBL_MAX : p;
    if (std::fabs(p) < kTinyGuard) return next_up(p);
    const double e = std::fma(a, b, -p);
    return e > 0 ? next_up(p) : p;
}

// Quotient kernels assume b != 0; sign analysis of the residual q*b - a
// decides whether the nearest-mode quotient over- or undershoots.
inline double div_down(double a, double b) {
    if (a == 0.0) return 0.0;
    const double q = a / b;
    if (!std::isfinite(q)) return q > 0 ? DBL_MAX : q;
    if (std::fabs(q) < kTinyGuard || std::fabs(a) < kTinyGuard) return next_down(q);
    const double r = std::fma(q, b, -a);
    const bool q_high = (b > 0) ? (r > 0) : (r < 0);
    return q_high ? next_down(q) : q;
}

inline double div_up(double a, double b) {
    if (a == 0.0) return 0.0;
    const double q = a / b;
    if (!std::isfinite(q)) return q < 0 ? -DBL_MAX : q;
    if (std::fabs(q) < kTinyGuard || std::fabs(a) < kTinyGuard) return next_up(q);
    const double r = std::fma(q, b, -a);
    const bool q_low = (b > 0) ? (r < 0) : (r > 0);
    return q_low ? next_up(q) : q;
}

// Thread-local MPFR workspace so the transcendental kernels never allocate
// in steady state.
struct MpfrScratch {
    mpfr_t a, b, r;
    MpfrScratch() { mpfr_inits2(53, a, b, r, static_cast<mpfr_ptr>(nullptr)); }
    ~MpfrScratch() { mpfr_clears(a, b, r, static_cast<mpfr_ptr>(nullptr)); }
    MpfrScratch(const MpfrScratch&) = delete;
    MpfrScratch& operator=(const MpfrScratch&) = delete;
};

inline MpfrScratch& mpfr_scratch() {
    thread_local MpfrScratch s;
    return s;
}

inline double exp_dir(double x, mpfr_rnd_t rnd) {
    auto& s = mpfr_scratch();
    mpfr_set_d(s.a, x, MPFR_RNDN); // exact
    mpfr_exp(s.r, s.a, rnd);
    return mpfr_get_d(s.r, rnd);
}

inline double log_dir(double x, mpfr_rnd_t rnd) {
    auto& s = mpfr_scratch();
    mpfr_set_d(s.a, x, MPFR_RNDN);
    mpfr_log(s.r, s.a, rnd);
    return mpfr_get_d(s.r, rnd);
}

inline double pow_dir(double x, double y, mpfr_rnd_t rnd) {
    auto& s = mpfr_scratch();
    mpfr_set_d(s.a, x, MPFR_RNDN);
    mpfr_set_d(s.b, y, MPFR_RNDN);
    mpfr_pow(s.r, s.a, s.b, rnd);
    return mpfr_get_d(s.r, rnd);
}

inline double gamma_dir(double x, mpfr_rnd_t rnd) {
    auto& s = mpfr_scratch();
    mpfr_set_d(s.a, x, MPFR_RNDN);
    mpfr_gamma(s.r, s.a, rnd);
    return mpfr_get_d(s.r, rnd);
}

} // namespace mlreach::detail

#endif
