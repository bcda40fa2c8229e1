#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mlreach/boxes.hpp"
#include "mlreach/interval.hpp"
#include "support/mpfr_oracle.hpp"

using namespace mlreach;
using mlreach::test::Op;

namespace {

Interval apply(Op op, Interval a, Interval b) {
    switch (op) {
        case Op::add: return a + b;
        case Op::sub: return a - b;
        case Op::mul: return a * b;
        default: return a / b;
    }
}

std::mt19937_64 rng(0x5eedULL);

double rand_in(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

Interval rand_interval(double lo, double hi) {
    double a = rand_in(lo, hi), b = rand_in(lo, hi);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

Interval rand_subinterval(Interval outer) {
    double a = rand_in(outer.lo, outer.hi), b = rand_in(outer.lo, outer.hi);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

} // namespace

TEST_CASE("interval construction enforces invariants") {
    CHECK_THROWS_AS(Interval(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(Interval(std::nan("")), DomainError);
    Interval a(1.0, 2.0);
    CHECK(a.lo == 1.0);
    CHECK(a.hi == 2.0);
}

TEST_CASE("exact integer arithmetic stays exact") {
    Interval r = Interval(1.0, 2.0) + Interval(3.0, 4.0);
    CHECK(r.lo == 4.0);
    CHECK(r.hi == 6.0);

    Interval m = Interval(-1.0, 2.0) * Interval(-3.0, 1.0);
    CHECK(m.lo == -6.0);
    CHECK(m.hi == 3.0);

    Interval d = Interval(1.0, 1.0) / Interval(2.0, 2.0);
    CHECK(d.lo == 0.5);
    CHECK(d.hi == 0.5);
}

TEST_CASE("outward rounding is visible on inexact sums") {
    Interval r = Interval(0.1, 0.1) + Interval(0.2, 0.2);
    CHECK(r.lo < r.hi);
    // True value of double(0.1) + double(0.2), bracketed in extended precision.
    CHECK(test::encloses_op(r, Op::add, 0.1, 0.2));
    // And it contains the real number 0.3 as well.
    CHECK(r.contains(0.3));
}

TEST_CASE("division by a zero-containing interval is an error") {
    CHECK_THROWS_AS(Interval(1.0) / Interval(-1.0, 1.0), DivisionByZeroInterval);
    CHECK_THROWS_AS(Interval(1.0) / Interval(0.0, 2.0), DivisionByZeroInterval);
    CHECK_NOTHROW(Interval(1.0) / Interval(0.5, 2.0));
}

TEST_CASE("intersect") {
    Interval r = intersect(Interval(0.0, 2.0), Interval(1.0, 3.0));
    CHECK(r.lo == 1.0);
    CHECK(r.hi == 2.0);

    Interval s = intersect(Interval(0.0, 1.0), Interval(0.0, 1.0));
    CHECK(s.lo == 0.0);
    CHECK(s.hi == 1.0);

    CHECK_THROWS_AS(intersect(Interval(0.0, 1.0), Interval(2.0, 3.0)), EmptyIntersection);
}

TEST_CASE("hull, midpoint, width, subset") {
    Interval h = hull(Interval(0.0, 1.0), Interval(2.0, 3.0));
    CHECK(h.lo == 0.0);
    CHECK(h.hi == 3.0);

    CHECK(midpoint(Interval(0.99, 1.01)) == 1.0);
    CHECK(subset_of(Interval(1.0, 2.0), Interval(0.0, 3.0)));
    CHECK_FALSE(subset_of(Interval(0.0, 3.0), Interval(1.0, 2.0)));
    CHECK(width(Interval(1.0, 3.0)) == 2.0);
}

TEST_CASE("inflate_sym") {
    Interval a = inflate_sym(Interval(1.0, 2.0), 0.0);
    CHECK(a.lo == 1.0);
    CHECK(a.hi == 2.0);

    Interval b = inflate_sym(Interval(0.0, 0.0), 0.5);
    CHECK(b.lo == -0.5);
    CHECK(b.hi == 0.5);

    Interval c = inflate_sym(Interval(-1.0, 1.0), 0.1);
    CHECK(c.lo <= -1.1);
    CHECK(c.hi >= 1.1);
    CHECK(c.lo >= -1.1000001);

    CHECK_THROWS_AS(inflate_sym(Interval(0.0), -1e-9), NegativeInflation);
}

TEST_CASE("pow_real basics") {
    Interval a = pow_real(Interval(0.0, 1.0), Interval(0.5, 0.5));
    CHECK(a.lo == 0.0);
    CHECK(a.hi == 1.0);

    Interval b = pow_real(Interval(4.0, 4.0), Interval(0.5, 0.5));
    CHECK(b.contains(2.0));
    CHECK(width(b) <= 4.0 * std::nextafter(2.0, 3.0) - 8.0); // 4 ulp at 2.0

    CHECK_THROWS_AS(pow_real(Interval(-1.0, 1.0), Interval(0.5, 0.5)), DomainError);
    CHECK_THROWS_AS(pow_real(Interval(1.0, 2.0), Interval(0.5, 1.5)), DomainError);
}

TEST_CASE("pow_real against dense grid oracle") {
    // 1e4 samples of {x^y} over [0.25,4] x [0.8,0.9], bracketed in extended
    // precision, must land inside the single interval result.
    Interval t(0.25, 4.0), nu(0.8, 0.9);
    Interval enc = pow_real(t, nu);
    for (int i = 0; i < 100; ++i) {
        double x = t.lo + (t.hi - t.lo) * i / 99.0;
        for (int j = 0; j < 100; ++j) {
            double y = nu.lo + (nu.hi - nu.lo) * j / 99.0;
            REQUIRE(test::encloses_pow(enc, x, y));
        }
    }
}

TEST_CASE("containment soundness of arith on random point pairs") {
    // 1e5 random pairs: x op y evaluated in extended precision lies inside
    // arith([x],[y],op) for point inputs and inside the interval result for
    // enclosing intervals.
    const Op ops[] = {Op::add, Op::sub, Op::mul, Op::div};
    int checked = 0;
    while (checked < 100000) {
        Interval a = rand_interval(-50.0, 50.0);
        Interval b = rand_interval(-50.0, 50.0);
        Op op = ops[checked % 4];
        if (op == Op::div && b.contains_zero()) {
            b = Interval(b.lo + 51.0, b.hi + 51.0);
        }
        Interval r = apply(op, a, b);
        double x = rand_in(a.lo, a.hi);
        double y = rand_in(b.lo, b.hi);
        REQUIRE(test::encloses_op(r, op, x, y));
        ++checked;
    }
}

TEST_CASE("inclusion isotonicity on random nested intervals") {
    const Op ops[] = {Op::add, Op::sub, Op::mul, Op::div};
    for (int i = 0; i < 4000; ++i) {
        Interval a2 = rand_interval(-20.0, 20.0);
        Interval b2 = rand_interval(-20.0, 20.0);
        Op op = ops[i % 4];
        if (op == Op::div && b2.contains_zero()) b2 = Interval(b2.lo + 21.0, b2.hi + 21.0);
        Interval a1 = rand_subinterval(a2);
        Interval b1 = rand_subinterval(b2);
        REQUIRE(subset_of(apply(op, a1, b1), apply(op, a2, b2)));
    }
}

TEST_CASE("intersect and hull lattice laws") {
    for (int i = 0; i < 2000; ++i) {
        Interval a = rand_interval(-10.0, 10.0);
        Interval b = rand_interval(-10.0, 10.0);
        Interval h = hull(a, b);
        CHECK(subset_of(a, h));
        CHECK(subset_of(b, h));
        Interval h2 = hull(b, a);
        CHECK(h.lo == h2.lo);
        CHECK(h.hi == h2.hi);
        try {
            Interval c = intersect(a, b);
            Interval c2 = intersect(b, a);
            CHECK(subset_of(c, a));
            CHECK(subset_of(c, b));
            CHECK(c.lo == c2.lo);
            CHECK(c.hi == c2.hi);
        } catch (const EmptyIntersection&) {
            CHECK((a.hi < b.lo || b.hi < a.lo));
        }
    }
}

TEST_CASE("pow_real containment on random samples") {
    for (int i = 0; i < 2000; ++i) {
        Interval t = rand_interval(0.0, 10.0);
        double nlo = rand_in(0.05, 1.0), nhi = rand_in(0.05, 1.0);
        if (nlo > nhi) std::swap(nlo, nhi);
        Interval nu(nlo, nhi);
        Interval enc = pow_real(t, nu);
        double x = rand_in(t.lo, t.hi);
        double y = rand_in(nu.lo, nu.hi);
        if (x == 0.0) continue;
        REQUIRE(test::encloses_pow(enc, x, y));
    }
}

TEST_CASE("sqr uses the even-power rule") {
    Interval s = sqr(Interval(-1.0, 1.0));
    CHECK(s.lo == 0.0);
    CHECK(s.hi == 1.0);
    Interval t = sqr(Interval(-3.0, -2.0));
    CHECK(t.lo == 4.0);
    CHECK(t.hi == 9.0);
}

TEST_CASE("interval vectors and matrices") {
    IntervalVector v{Interval(1.0, 2.0), Interval(-1.0, 1.0)};
    IntervalMatrix id(2, 2);
    id(0, 0) = Interval(1.0);
    id(1, 1) = Interval(1.0);

    SECTION("identity times vector preserves widths") {
        IntervalVector r = imat_vec(id, v);
        CHECK(r[0].lo == 1.0);
        CHECK(r[0].hi == 2.0);
        CHECK(r[1].lo == -1.0);
        CHECK(r[1].hi == 1.0);
    }

    SECTION("upper triangular point matrix times point vector is exact") {
        IntervalMatrix u(2, 2);
        u(0, 0) = Interval(1.0);
        u(0, 1) = Interval(1.0);
        u(1, 1) = Interval(1.0);
        IntervalVector p{Interval(3.0), Interval(4.0)};
        IntervalVector r = imat_vec(u, p);
        CHECK(r[0].lo == 7.0);
        CHECK(r[0].hi == 7.0);
        CHECK(r[1].lo == 4.0);
        CHECK(r[1].hi == 4.0);
    }

    SECTION("random point product contained in extended-precision result") {
        for (int rep = 0; rep < 200; ++rep) {
            IntervalMatrix m(3, 3);
            std::vector<double> mv(9), xv(3);
            for (int i = 0; i < 9; ++i) mv[i] = rand_in(-5.0, 5.0);
            for (int i = 0; i < 3; ++i) xv[i] = rand_in(-5.0, 5.0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m(i, j) = Interval(mv[3 * i + j]);
            IntervalVector x{Interval(xv[0]), Interval(xv[1]), Interval(xv[2])};
            IntervalVector r = imat_vec(m, x);
            for (int i = 0; i < 3; ++i) {
                test::Big lo(192), hi(192), t(192), p(192);
                mpfr_set_zero(lo.get(), 1);
                mpfr_set_zero(hi.get(), 1);
                for (int j = 0; j < 3; ++j) {
                    mpfr_set_d(p.get(), mv[3 * i + j], MPFR_RNDN);
                    mpfr_mul_d(p.get(), p.get(), xv[j], MPFR_RNDD);
                    mpfr_add(lo.get(), lo.get(), p.get(), MPFR_RNDD);
                    mpfr_set_d(p.get(), mv[3 * i + j], MPFR_RNDN);
                    mpfr_mul_d(p.get(), p.get(), xv[j], MPFR_RNDU);
                    mpfr_add(hi.get(), hi.get(), p.get(), MPFR_RNDU);
                }
                REQUIRE(lo.geq(r[i].lo));
                REQUIRE(hi.leq(r[i].hi));
            }
        }
    }

    SECTION("dimension mismatch throws") {
        IntervalMatrix m(2, 3);
        CHECK_THROWS_AS(imat_vec(m, v), DimensionMismatch);
    }
}
