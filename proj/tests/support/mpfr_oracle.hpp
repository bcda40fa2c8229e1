#ifndef MLREACH_TESTS_MPFR_ORACLE_HPP
#define MLREACH_TESTS_MPFR_ORACLE_HPP

// Test-side extended-precision oracles. Every check brackets the true value
// between a 192-bit round-down and round-up evaluation, so "oracle inside
// enclosure" assertions never suffer from oracle rounding flakiness.

#include <mpfr.h>

#include <string>

#include "mlreach/interval.hpp"

namespace mlreach::test {

class Big {
  public:
    explicit Big(mpfr_prec_t prec = 192) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Big(const Big& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Big& operator=(const Big& o) {
        if (this != &o) mpfr_set(x_, o.x_, MPFR_RNDN);
        return *this;
    }
    ~Big() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

    static Big from(double d, mpfr_prec_t prec = 192) {
        Big b(prec);
        mpfr_set_d(b.x_, d, MPFR_RNDN); // exact
        return b;
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool leq(double d) const { return mpfr_cmp_d(x_, d) <= 0; }
    bool geq(double d) const { return mpfr_cmp_d(x_, d) >= 0; }

  private:
    mpfr_t x_;
};

enum class Op { add, sub, mul, div };

// True value of (a op b) bracketed at 192 bits; returns [vlo, vhi].
inline std::pair<Big, Big> op_bracket(Op op, double a, double b) {
    Big lo, hi;
    Big xa = Big::from(a), xb = Big::from(b);
    auto apply = [&](mpfr_ptr out, mpfr_rnd_t rnd) {
        switch (op) {
            case Op::add: mpfr_add(out, xa.get(), xb.get(), rnd); break;
            case Op::sub: mpfr_sub(out, xa.get(), xb.get(), rnd); break;
            case Op::mul: mpfr_mul(out, xa.get(), xb.get(), rnd); break;
            case Op::div: mpfr_div(out, xa.get(), xb.get(), rnd); break;
        }
    };
    apply(lo.get(), MPFR_RNDD);
    apply(hi.get(), MPFR_RNDU);
    return {lo, hi};
}

// enc must contain the bracketed true value of (a op b).
inline bool encloses_op(const Interval& enc, Op op, double a, double b) {
    auto [vlo, vhi] = op_bracket(op, a, b);
    return vlo.geq(enc.lo) && vhi.leq(enc.hi);
}

// enc must contain the bracketed true value of a^b (a > 0).
inline bool encloses_pow(const Interval& enc, double a, double b) {
    Big lo, hi;
    Big xa = Big::from(a), xb = Big::from(b);
    mpfr_pow(lo.get(), xa.get(), xb.get(), MPFR_RNDD);
    mpfr_pow(hi.get(), xa.get(), xb.get(), MPFR_RNDU);
    return lo.geq(enc.lo) && hi.leq(enc.hi);
}

inline bool encloses_exp(const Interval& enc, double a) {
    Big lo, hi;
    Big xa = Big::from(a);
    mpfr_exp(lo.get(), xa.get(), MPFR_RNDD);
    mpfr_exp(hi.get(), xa.get(), MPFR_RNDU);
    return lo.geq(enc.lo) && hi.leq(enc.hi);
}

inline bool encloses_gamma(const Interval& enc, double a) {
    Big lo, hi;
    Big xa = Big::from(a);
    mpfr_gamma(lo.get(), xa.get(), MPFR_RNDD);
    mpfr_gamma(hi.get(), xa.get(), MPFR_RNDU);
    return lo.geq(enc.lo) && hi.leq(enc.hi);
}

} // namespace mlreach::test

#endif
