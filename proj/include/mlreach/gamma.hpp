#ifndef MLREACH_GAMMA_HPP
#define MLREACH_GAMMA_HPP

#include <algorithm>

#include "mlreach/interval.hpp"

namespace mlreach {

namespace detail {

// Gamma is strictly decreasing on (0, x*] and strictly increasing on
// [x*, inf), with a single positive minimum. Certified brackets for the
// minimizer and the minimum value (Wrench 1961; digits cross-checked in the
// unit tests against directed evaluations):
//   x*      = 1.46163 21449 68362 34126...
//   Gamma(x*) = 0.88560 31944 10888 70027...
inline constexpr double kGammaMinLocLo = 1.4616321449683620;
inline constexpr double kGammaMinLocHi = 1.4616321449683625;
inline constexpr double kGammaMinValLo = 0.8856031944108886;
inline constexpr double kGammaMinValHi = 0.8856031944108890;

// Directed evaluation at a point; correctly rounded by MPFR.
inline Interval gamma_point(double x) {
    return Interval::unchecked(gamma_dir(x, MPFR_RNDD), gamma_dir(x, MPFR_RNDU));
}

} // namespace detail

// Rigorous enclosure of { Gamma(t) : t in x }, x.lo > 0.
inline Interval gamma_enclosure(Interval x) {
    if (!(x.lo > 0.0)) throw DomainError("gamma_enclosure: argument must be positive");

    const Interval at_lo = detail::gamma_point(x.lo);
    const Interval at_hi = x.is_point() ? at_lo : detail::gamma_point(x.hi);

    // Unimodality: the maximum over a positive interval is at an endpoint.
    const double hi = std::max(at_lo.hi, at_hi.hi);

    double lo = std::min(at_lo.lo, at_hi.lo);
    // If the interval can touch the minimizer, the global minimum value is the
    // only safe lower bound.
    if (x.hi >= detail::kGammaMinLocLo && x.lo <= detail::kGammaMinLocHi)
        lo = std::min(lo, detail::kGammaMinValLo);

    return Interval::unchecked(lo, hi);
}

} // namespace mlreach

#endif
