#ifndef MLREACH_ORACLES_HIGHPREC_HPP
#define MLREACH_ORACLES_HIGHPREC_HPP

// Non-verified extended-precision Mittag-Leffler oracle: plain MPFR
// summation of the defining series at a precision chosen to survive the
// cancellation hump of the alternating series. Used by tests to cross-check
// the rigorous interval evaluations; not part of any soundness argument.

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <string>

#include "mlreach/errors.hpp"
#include "mlreach/interval.hpp"

namespace mlreach::oracles {

namespace detail {

// log2 of the largest series term magnitude, estimated in floating point.
// Only used to pick a working precision; rigor never depends on it.
inline double ml_peak_log2(double nu, double beta, double z) {
    const double la = std::log(std::fabs(z));
    double peak = 0.0;
    if (std::fabs(z) <= 1.0) return 0.0;
    for (int i = 1; i < 2000000; ++i) {
        const double t = i * la - std::lgamma(nu * i + beta);
        if (t > peak) peak = t;
        // past the peak and falling hard: done
        if (t < peak - 40.0) break;
    }
    return peak / std::log(2.0);
}

} // namespace detail

// Sums the two-parameter Mittag-Leffler series for E_{nu,beta}(z) into `out`
// (which must be initialized at the working precision). Terms are added in
// round-to-nearest; summation stops once the term magnitude falls below
// 2^-(stop_bits) relative to max(1, |sum|). Returns the number of terms.
inline long ml_series_mpfr(mpfr_ptr out, double nu, double beta, double z,
                           long stop_bits, long max_terms = 2000000) {
    const mpfr_prec_t prec = mpfr_get_prec(out);
    mpfr_t power, garg, g, term, athr;
    mpfr_inits2(prec, power, garg, g, term, athr, static_cast<mpfr_ptr>(nullptr));

    mpfr_set_zero(out, 1);
    mpfr_set_d(power, 1.0, MPFR_RNDN); // z^0

    // index after which terms are certainly shrinking (float estimate)
    const double la = std::fabs(z) > 0 ? std::log(std::fabs(z)) : -1.0;
    long past_peak_idx = 8;
    if (std::fabs(z) > 1.0) {
        // term ratio |z| / (Gamma growth) < 1 once Gamma(nu i + beta + nu)
        // outgrows |z| * Gamma(nu i + beta); scan cheaply.
        for (long i = 1; i < max_terms; ++i) {
            const double cur = i * la - std::lgamma(nu * i + beta);
            const double nxt = (i + 1) * la - std::lgamma(nu * (i + 1) + beta);
            if (nxt < cur) {
                past_peak_idx = i + 2;
                break;
            }
        }
    }

    long i = 0;
    for (; i < max_terms; ++i) {
        mpfr_set_d(garg, nu, MPFR_RNDN);
        mpfr_mul_si(garg, garg, i, MPFR_RNDN);
        mpfr_add_d(garg, garg, beta, MPFR_RNDN);
        mpfr_gamma(g, garg, MPFR_RNDN);
        mpfr_div(term, power, g, MPFR_RNDN);
        mpfr_add(out, out, term, MPFR_RNDN);
        mpfr_mul_d(power, power, z, MPFR_RNDN);

        if (i >= past_peak_idx) {
            // |term| < 2^-stop_bits * max(1, |sum|) ?
            mpfr_abs(athr, out, MPFR_RNDN);
            if (mpfr_cmp_d(athr, 1.0) < 0) mpfr_set_d(athr, 1.0, MPFR_RNDN);
            mpfr_mul_2si(athr, athr, -stop_bits, MPFR_RNDN);
            mpfr_abs(term, term, MPFR_RNDN);
            if (mpfr_cmp(term, athr) < 0) {
                ++i;
                break;
            }
        }
    }
    mpfr_clears(power, garg, g, term, athr, static_cast<mpfr_ptr>(nullptr));
    if (i >= max_terms) throw BudgetExceeded("ml_series_mpfr: term budget exhausted");
    return i;
}

// E_{nu,beta}(z) to `digits` correctly rounded decimal digits.
inline std::string ml_highprec(double nu, double beta, double z, int digits) {
    if (!(nu > 0.0) || !(beta > 0.0)) throw DomainError("ml_highprec: nu, beta must be positive");
    if (std::fabs(z) > 50.0) throw DomainError("ml_highprec: |z| > 50 unsupported");
    if (digits < 1 || digits > 200) throw DomainError("ml_highprec: digits out of range");

    const long need_bits = static_cast<long>((digits + 12) * 3.3219280948873623) + 16;
    const long peak_bits = static_cast<long>(detail::ml_peak_log2(nu, beta, z)) + 8;
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(need_bits + peak_bits + 64);

    mpfr_t sum;
    mpfr_init2(sum, prec);
    ml_series_mpfr(sum, nu, beta, z, need_bits + peak_bits);

    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), sum, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    mpfr_clear(sum);

    // format as [-]d.ddd...e+N
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    char expbuf[24];
    std::snprintf(expbuf, sizeof expbuf, "e%+ld", static_cast<long>(e) - 1);
    return out + expbuf;
}

// A three-ulp-thin double bracket of the true value; convenient for
// containment assertions against rigorous enclosures. The internal sum is
// accurate to far below one double ulp, so nudging each side once covers the
// oracle's own error.
inline Interval ml_highprec_thin(double nu, double beta, double z) {
    const long peak_bits = static_cast<long>(detail::ml_peak_log2(nu, beta, z)) + 8;
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(192 + peak_bits);
    mpfr_t sum;
    mpfr_init2(sum, prec);
    ml_series_mpfr(sum, nu, beta, z, 150 + peak_bits);
    const double lo = mpfr_get_d(sum, MPFR_RNDD);
    const double hi = mpfr_get_d(sum, MPFR_RNDU);
    mpfr_clear(sum);
    return Interval::unchecked(mlreach::detail::next_down(lo), mlreach::detail::next_up(hi));
}

} // namespace mlreach::oracles

#endif
