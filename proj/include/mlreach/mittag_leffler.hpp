#ifndef MLREACH_MITTAG_LEFFLER_HPP
#define MLREACH_MITTAG_LEFFLER_HPP

// Rigorous interval evaluation of the two-parameter Mittag-Leffler function
//
//     E_{nu,beta}(z) = sum_{i>=0} z^i / Gamma(nu*i + beta)
//
// for real arguments and an interval order nu inside (0, 1].
//
// The series is summed in interval arithmetic (order uncertainty enters
// through the interval argument of Gamma). The tail from the first neglected
// index N is bounded by a geometric series: with a_i = sup|z|^i /
// Gamma(nu.lo*i + beta), the ratio a_{i+1}/a_i = sup|z| * Gamma(x)/Gamma(x +
// nu.lo) is decreasing in x = nu.lo*i + beta (digamma is strictly
// increasing), so certifying ratio <= 1/2 at N certifies it for every later
// index. Requires nu.lo*N + beta >= 2, which puts the Gamma arguments in the
// increasing zone so that the order-interval minimum sits at nu.lo.
//
// Alternating arguments cancel catastrophically once |z| is large (the terms
// peak near exp(|z|^(1/nu))), so when the double-precision sum cannot reach
// the requested width the evaluation escalates to MPFR interval endpoints at
// a precision chosen from the estimated peak size. The estimate only selects
// the working precision; containment never depends on it.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mlreach/errors.hpp"
#include "mlreach/gamma.hpp"
#include "mlreach/interval.hpp"

namespace mlreach {

// Interval Mittag-Leffler query: E_{nu,beta} over the real interval z,
// with target enclosure width tol.
struct MLQuery {
    Interval nu;
    double beta = 1.0;
    Interval z;
    double tol = 1e-12;
};

// Enclosure plus evaluation diagnostics.
struct MLValue {
    Interval enclosure;
    int terms = 0;           // series terms summed
    double tail_bound = 0.0; // certified bound on the neglected tail
    bool tol_met = true;     // false: widest certified enclosure returned
    int precision_bits = 53; // arithmetic precision of the summation
};

namespace detail {

inline constexpr int kMLMaxTerms = 3000;
inline constexpr double kMLArgLimit = 50.0;

// ---- gamma cache for the double-precision series path -------------------
// One (nu, beta) key per thread; the enclosure iteration reuses the same
// order thousands of times.
struct GammaSeriesCache {
    double nu_lo = 0.0, nu_hi = -1.0, beta = 0.0; // invalid key
    std::vector<Interval> values;

    const Interval& get(Interval nu, double b, int i) {
        if (nu.lo != nu_lo || nu.hi != nu_hi || b != beta) {
            nu_lo = nu.lo;
            nu_hi = nu.hi;
            beta = b;
            values.clear();
        }
        while (static_cast<int>(values.size()) <= i) {
            const int k = static_cast<int>(values.size());
            const Interval arg = nu * static_cast<double>(k) + b;
            values.push_back(gamma_enclosure(arg));
        }
        return values[static_cast<std::size_t>(i)];
    }
};

inline GammaSeriesCache& gamma_series_cache() {
    thread_local GammaSeriesCache c;
    return c;
}

// ---- MPFR interval endpoints for the escalated path ----------------------
class MpInterval {
  public:
    explicit MpInterval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    MpInterval(const MpInterval& o) {
        mpfr_init2(lo_, mpfr_get_prec(o.lo_));
        mpfr_init2(hi_, mpfr_get_prec(o.hi_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    MpInterval& operator=(const MpInterval& o) {
        if (this != &o) {
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }
    ~MpInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    void set(Interval x) {
        mpfr_set_d(lo_, x.lo, MPFR_RNDD);
        mpfr_set_d(hi_, x.hi, MPFR_RNDU);
    }

    void add(const MpInterval& b) {
        mpfr_add(lo_, lo_, b.lo_, MPFR_RNDD);
        mpfr_add(hi_, hi_, b.hi_, MPFR_RNDU);
    }

    void mul(const MpInterval& b) { // *this := *this * b
        const mpfr_prec_t p = mpfr_get_prec(lo_);
        mpfr_t c1, c2, c3, c4, rlo, rhi;
        mpfr_inits2(p, c1, c2, c3, c4, rlo, rhi, static_cast<mpfr_ptr>(nullptr));
        mpfr_mul(c1, lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(c2, lo_, b.hi_, MPFR_RNDD);
        mpfr_mul(c3, hi_, b.lo_, MPFR_RNDD);
        mpfr_mul(c4, hi_, b.hi_, MPFR_RNDD);
        mpfr_min(rlo, c1, c2, MPFR_RNDD);
        mpfr_min(rlo, rlo, c3, MPFR_RNDD);
        mpfr_min(rlo, rlo, c4, MPFR_RNDD);
        mpfr_mul(c1, lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(c2, lo_, b.hi_, MPFR_RNDU);
        mpfr_mul(c3, hi_, b.lo_, MPFR_RNDU);
        mpfr_mul(c4, hi_, b.hi_, MPFR_RNDU);
        mpfr_max(rhi, c1, c2, MPFR_RNDU);
        mpfr_max(rhi, rhi, c3, MPFR_RNDU);
        mpfr_max(rhi, rhi, c4, MPFR_RNDU);
        mpfr_set(lo_, rlo, MPFR_RNDD);
        mpfr_set(hi_, rhi, MPFR_RNDU);
        mpfr_clears(c1, c2, c3, c4, rlo, rhi, static_cast<mpfr_ptr>(nullptr));
    }

    // *this := *this / [glo, ghi], denominator strictly positive.
    void div_pos(mpfr_srcptr glo, mpfr_srcptr ghi) {
        const mpfr_prec_t p = mpfr_get_prec(lo_);
        mpfr_t rlo, rhi;
        mpfr_inits2(p, rlo, rhi, static_cast<mpfr_ptr>(nullptr));
        // lo/den: minimized by dividing a negative lo by the small endpoint,
        // a positive lo by the large endpoint.
        mpfr_div(rlo, lo_, mpfr_sgn(lo_) < 0 ? glo : ghi, MPFR_RNDD);
        mpfr_div(rhi, hi_, mpfr_sgn(hi_) > 0 ? glo : ghi, MPFR_RNDU);
        mpfr_set(lo_, rlo, MPFR_RNDD);
        mpfr_set(hi_, rhi, MPFR_RNDU);
        mpfr_clears(rlo, rhi, static_cast<mpfr_ptr>(nullptr));
    }

    // Integer upper bound for log2(sup |*this|); safe against overflow.
    long mag_exp() const {
        if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return -1000000;
        mpfr_exp_t e1 = mpfr_zero_p(lo_) ? mpfr_get_emin() : mpfr_get_exp(lo_);
        mpfr_exp_t e2 = mpfr_zero_p(hi_) ? mpfr_get_emin() : mpfr_get_exp(hi_);
        return static_cast<long>(std::max(e1, e2));
    }

    Interval to_interval() const {
        return Interval::unchecked(mpfr_get_d(lo_, MPFR_RNDD), mpfr_get_d(hi_, MPFR_RNDU));
    }

    double width() const {
        const mpfr_prec_t p = mpfr_get_prec(lo_);
        mpfr_t w;
        mpfr_init2(w, p);
        mpfr_sub(w, hi_, lo_, MPFR_RNDU);
        const double r = mpfr_get_d(w, MPFR_RNDU);
        mpfr_clear(w);
        return r;
    }

    mpfr_ptr lo() { return lo_; }
    mpfr_ptr hi() { return hi_; }

  private:
    mpfr_t lo_, hi_;
};

// Gamma enclosure over a positive interval argument at MPFR precision,
// same unimodality analysis as the double version.
inline void gamma_mp(mpfr_ptr out_lo, mpfr_ptr out_hi, Interval arg) {
    const mpfr_prec_t p = mpfr_get_prec(out_lo);
    mpfr_t a, g1, g2;
    mpfr_inits2(p, a, g1, g2, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(a, arg.lo, MPFR_RNDD);
    mpfr_gamma(g1, a, MPFR_RNDD);
    mpfr_set_d(a, arg.hi, MPFR_RNDD);
    mpfr_gamma(g2, a, MPFR_RNDD);
    mpfr_min(out_lo, g1, g2, MPFR_RNDD);
    if (arg.hi >= kGammaMinLocLo && arg.lo <= kGammaMinLocHi) {
        mpfr_set_d(a, kGammaMinValLo, MPFR_RNDD);
        mpfr_min(out_lo, out_lo, a, MPFR_RNDD);
    }
    mpfr_set_d(a, arg.lo, MPFR_RNDU);
    mpfr_gamma(g1, a, MPFR_RNDU);
    mpfr_set_d(a, arg.hi, MPFR_RNDU);
    mpfr_gamma(g2, a, MPFR_RNDU);
    mpfr_max(out_hi, g1, g2, MPFR_RNDU);
    mpfr_clears(a, g1, g2, static_cast<mpfr_ptr>(nullptr));
}

// ---- certified geometric tail bound --------------------------------------
// Upper-bounds sum_{i>=N} sup|z|^i / Gamma(nu.lo*i+beta) given an integer
// bound mag_exp for log2 of sup|z^N| (wrapping included). Returns false if
// the ratio cannot be certified <= 1/2 at N. Pure MPFR directed arithmetic;
// immune to double overflow.
inline bool tail_bound_mp(double nu_lo, double beta, double zmag, long N, long mag_exp,
                          double& tail_out) {
    const double xN_lo = add_down(mul_down(nu_lo, static_cast<double>(N)), beta);
    if (!(xN_lo >= 2.0)) return false; // not yet in the increasing-Gamma zone

    const double xN_hi = add_up(mul_up(nu_lo, static_cast<double>(N)), beta);
    const double y_lo = add_down(xN_lo, nu_lo);

    mpfr_t gU, gL, gN, r, t;
    mpfr_inits2(96, gU, gL, gN, r, t, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_d(t, xN_hi, MPFR_RNDU);
    mpfr_gamma(gU, t, MPFR_RNDU); // >= Gamma at the true xN (increasing zone)
    mpfr_set_d(t, y_lo, MPFR_RNDD);
    mpfr_gamma(gL, t, MPFR_RNDD); // <= Gamma(xN + nu.lo)
    mpfr_set_d(t, xN_lo, MPFR_RNDD);
    mpfr_gamma(gN, t, MPFR_RNDD); // <= Gamma(xN)

    // ratio = zmag * Gamma(xN)/Gamma(xN+nu.lo), rounded up
    mpfr_div(r, gU, gL, MPFR_RNDU);
    mpfr_mul_d(r, r, zmag, MPFR_RNDU);
    bool ok = mpfr_cmp_d(r, 0.5) <= 0;
    if (ok) {
        // a_N <= 2^mag_exp / Gamma(xN); tail <= a_N / (1 - ratio)
        mpfr_set_d(t, 1.0, MPFR_RNDN);
        mpfr_mul_2si(t, t, mag_exp, MPFR_RNDN); // exact
        mpfr_div(t, t, gN, MPFR_RNDU);
        mpfr_d_sub(r, 1.0, r, MPFR_RNDD);
        mpfr_div(t, t, r, MPFR_RNDU);
        tail_out = mpfr_get_d(t, MPFR_RNDU);
    }
    mpfr_clears(gU, gL, gN, r, t, static_cast<mpfr_ptr>(nullptr));
    return ok;
}

// Cheap non-rigorous filter deciding when to attempt the rigorous tail
// check; only affects performance.
inline bool tail_check_worthwhile(double nu_lo, double beta, double zmag, long N, long mag_exp,
                                  double tol) {
    const double xN = nu_lo * static_cast<double>(N) + beta;
    if (xN < 2.0) return false;
    if (zmag > 0.0 && zmag * std::exp(std::lgamma(xN) - std::lgamma(xN + nu_lo)) > 0.5)
        return false;
    const double est_log2 =
        static_cast<double>(mag_exp) - std::lgamma(xN) / 0.6931471805599453;
    return est_log2 < std::log2(std::max(tol, 1e-300)) + 6.0;
}

// ---- series evaluation, double-precision intervals ------------------------
inline MLValue ml_series_double(Interval nu, double beta, Interval z, double tol) {
    MLValue out;
    Interval sum(0.0);
    Interval power(1.0);
    const double zmag = mag(z);
    auto& cache = gamma_series_cache();

    for (int i = 0; i < kMLMaxTerms; ++i) {
        const Interval& g = cache.get(nu, beta, i);
        sum = sum + power / g;
        power = power * z;

        const long N = i + 1;
        const double pm = mag(power);
        const long mag_exp = pm == 0.0 ? -1000000
                                       : (std::isfinite(pm) ? std::ilogb(pm) + 1 : 1000000);
        if (mag_exp >= 1000000) continue; // saturated; width check will escalate
        if (!tail_check_worthwhile(nu.lo, beta, zmag, N, mag_exp, tol)) continue;
        double tail = 0.0;
        if (tail_bound_mp(nu.lo, beta, zmag, N, mag_exp, tail) && tail <= 0.25 * tol) {
            out.enclosure = inflate_sym(sum, tail);
            out.terms = static_cast<int>(N);
            out.tail_bound = tail;
            out.tol_met = width(out.enclosure) <= tol;
            return out;
        }
    }
    throw BudgetExceeded("ml series: tail not certifiable within the term budget");
}

// ---- series evaluation, MPFR intervals ------------------------------------
inline MLValue ml_series_mp(Interval nu, double beta, Interval z, double tol,
                            mpfr_prec_t prec) {
    MLValue out;
    out.precision_bits = static_cast<int>(prec);
    MpInterval sum(prec), power(prec), term(prec);
    MpInterval glo_hi(prec); // unused placeholder to keep inits local
    (void)glo_hi;
    power.set(Interval(1.0));
    MpInterval zv(prec);
    zv.set(z);
    const double zmag = mag(z);

    mpfr_t glo, ghi;
    mpfr_inits2(prec, glo, ghi, static_cast<mpfr_ptr>(nullptr));

    for (int i = 0; i < kMLMaxTerms; ++i) {
        const Interval garg = nu * static_cast<double>(i) + beta;
        gamma_mp(glo, ghi, garg);
        term = power;
        term.div_pos(glo, ghi);
        sum.add(term);
        power.mul(zv);

        const long N = i + 1;
        const long mag_exp = power.mag_exp();
        if (!tail_check_worthwhile(nu.lo, beta, zmag, N, mag_exp, tol)) continue;
        double tail = 0.0;
        if (tail_bound_mp(nu.lo, beta, zmag, N, mag_exp, tail) && tail <= 0.25 * tol) {
            out.enclosure = inflate_sym(sum.to_interval(), tail);
            out.terms = static_cast<int>(N);
            out.tail_bound = tail;
            out.tol_met = width(out.enclosure) <= tol;
            mpfr_clears(glo, ghi, static_cast<mpfr_ptr>(nullptr));
            return out;
        }
    }
    mpfr_clears(glo, ghi, static_cast<mpfr_ptr>(nullptr));
    throw BudgetExceeded("ml series (mpfr): tail not certifiable within the term budget");
}

// Estimated log2 of the peak series term; precision selection only.
inline double ml_peak_log2_est(double nu_lo, double beta, double zmag) {
    if (zmag <= 1.0) return 0.0;
    const double la = std::log(zmag);
    double peak = 0.0;
    for (int i = 1; i < kMLMaxTerms; ++i) {
        const double t = i * la - std::lgamma(nu_lo * i + beta);
        if (t > peak) peak = t;
        if (t < peak - 60.0) break;
    }
    return peak / 0.6931471805599453;
}

inline void ml_validate(Interval nu, double beta, Interval z) {
    if (!(nu.lo > 0.0) || nu.hi > 1.0)
        throw DomainError("mittag-leffler: order interval must lie inside (0, 1]");
    if (!(beta > 0.0)) throw DomainError("mittag-leffler: beta must be positive");
    if (!z.is_finite()) throw DomainError("mittag-leffler: non-finite argument");
    if (mag(z) > kMLArgLimit)
        throw BudgetExceeded("mittag-leffler: |z| > 50 outside the supported range");
}

inline MLValue ml_eval(Interval nu, double beta, Interval z, double tol) {
    ml_validate(nu, beta, z);
    if (!(tol > 0.0)) throw DomainError("mittag-leffler: tol must be positive");

    const double zmag = mag(z);
    const double peak = ml_peak_log2_est(nu.lo, beta, zmag);

    MLValue best;
    bool have = false;
    if (peak < 900.0) { // double dynamic range with headroom
        best = ml_series_double(nu, beta, z, tol);
        if (best.tol_met) return best;
        have = true;
    }

    mpfr_prec_t prec = static_cast<mpfr_prec_t>(
        std::max(96.0, peak + 64.0 + std::max(0.0, -std::log2(std::max(tol, 1e-300)))));
    for (int attempt = 0; attempt < 3; ++attempt, prec *= 2) {
        MLValue v = ml_series_mp(nu, beta, z, tol, prec);
        if (!have || width(v.enclosure) < width(best.enclosure)) {
            best = v;
            have = true;
        }
        if (best.tol_met) return best;
    }
    return best; // widest certified enclosure, tol_met = false
}

} // namespace detail

// Guaranteed coarse envelope exp(-zeta) <= E_{nu,1}(-zeta) <= 1/(1+zeta),
// valid for every order in (0, 1] and zeta >= 0.
inline Interval crude_envelope(Interval /*nu*/, double zeta) {
    if (std::isnan(zeta) || zeta < 0.0) throw DomainError("crude_envelope: zeta must be >= 0");
    const double lo = detail::exp_dir(-zeta, MPFR_RNDD);
    const double hi = detail::div_up(1.0, detail::add_down(1.0, zeta));
    return Interval::unchecked(lo, hi);
}

// Rigorous enclosure of { E_{n,beta}(z) : n in nu } at a point argument z.
inline MLValue ml_point(Interval nu, double beta, double z, double tol = 1e-12) {
    MLValue v = detail::ml_eval(nu, beta, Interval(z), tol);
    // For beta = 1 and z <= 0 the coarse envelope is always valid; intersect.
    if (beta == 1.0 && z <= 0.0) {
        v.enclosure = intersect(v.enclosure, crude_envelope(nu, -z));
    }
    return v;
}

// Rigorous enclosure of { E_{n,beta}(x) : n in nu, x in z }.
//
// For beta >= nu the function is increasing in its real argument (all series
// terms increase for z >= 0; complete monotonicity of E_{nu,beta}(-zeta) for
// 0 < nu <= 1, beta >= nu covers z <= 0), so the hull of the two endpoint
// evaluations encloses the range. Otherwise falls back to the direct
// interval-argument series.
inline MLValue ml_interval(const MLQuery& q) {
    if (q.z.is_point()) return ml_point(q.nu, q.beta, q.z.lo, q.tol);
    if (q.beta >= q.nu.hi) {
        MLValue a = ml_point(q.nu, q.beta, q.z.lo, q.tol);
        MLValue b = ml_point(q.nu, q.beta, q.z.hi, q.tol);
        MLValue out;
        out.enclosure = hull(a.enclosure, b.enclosure);
        out.terms = std::max(a.terms, b.terms);
        out.tail_bound = std::max(a.tail_bound, b.tail_bound);
        out.tol_met = a.tol_met && b.tol_met;
        out.precision_bits = std::max(a.precision_bits, b.precision_bits);
        return out;
    }
    MLValue v = detail::ml_eval(q.nu, q.beta, q.z, q.tol);
    if (q.beta == 1.0 && q.z.hi <= 0.0)
        v.enclosure = intersect(v.enclosure, crude_envelope(q.nu, -q.z.hi));
    return v;
}

inline MLValue ml_interval(Interval nu, double beta, Interval z, double tol = 1e-12) {
    return ml_interval(MLQuery{nu, beta, z, tol});
}

// Wraps an external floating-point Mittag-Leffler value of stated relative
// tolerance eps into a guaranteed enclosure:
//   [E*] = [E~] + eps/(1+eps) * (1 + |[E~]|) * [-1, 1].
inline Interval ml_interval_from_float(Interval approx, double eps) {
    if (!(eps > 0.0)) throw DomainError("ml_interval_from_float: eps must be positive");
    using namespace detail;
    const double factor = div_up(eps, add_down(1.0, eps));
    const double radius = mul_up(factor, add_up(1.0, mag(approx)));
    return inflate_sym(approx, radius);
}

} // namespace mlreach

#endif
