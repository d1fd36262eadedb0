#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "test_util.hpp"
#include "tzeta/complex.hpp"
#include "tzeta/error.hpp"
#include "tzeta/precision.hpp"
#include "tzeta/rational.hpp"
#include "tzeta/real.hpp"
#include "tzeta/series.hpp"
#include "tzeta/special.hpp"

using namespace tzeta;
using tzeta::testutil::check_close;
using tzeta::testutil::check_close_abs;

namespace {

const PrecisionContext ctx30(30);

// library-backed reference value, used only as a cross-check oracle
Real zeta_mpfr(int n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    r.set_error_bound(2 * r.ulp());
    return r;
}

}  // namespace

TEST_CASE("real arithmetic and error propagation basics") {
    mpfr_prec_t wp = ctx30.work_prec();
    Real a = Real::of_long(3, wp).div_long(7);
    Real b = Real::of_long(2, wp).sqrt();
    Real c = a * b + b / a - (-a);
    CHECK(c.error_bound() > 0);
    CHECK(c.error_bound() < 1e-30);
    CHECK(c.to_double() == doctest::Approx(3.0 / 7 * std::sqrt(2.0) +
                                           std::sqrt(2.0) / (3.0 / 7) + 3.0 / 7));
    Real z = b * b - Real::of_long(2, wp);
    CHECK(z.abs().to_double() <= z.error_bound());
}

TEST_CASE("elementary examples") {
    mpfr_prec_t wp = ctx30.work_prec();
    Complex zero = Complex::of_long(0, wp);
    check_close(elementary(Elementary::exp, zero, ctx30).re(), Real::of_long(1, wp));

    // principal sqrt(-1 + 0i) = i
    Complex m1 = Complex::of_long(-1, wp);
    Complex s = elementary(Elementary::sqrt, m1, ctx30);
    CHECK(s.re().abs().to_double() < 1e-35);
    check_close(s.im(), Real::of_long(1, wp));

    Complex piq(Real::pi(wp).div_long(4), Real::of_long(0, wp));
    check_close(elementary(Elementary::cot, piq, ctx30).re(), Real::of_long(1, wp));

    Complex two = Complex::of_long(2, wp);
    Complex half(Real::of_double(0.5, wp), Real::of_long(0, wp));
    check_close(elementary(Elementary::power, two, ctx30, &half).re(),
                Real::of_long(2, wp).sqrt());
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == mpq_class(1));
    CHECK(bernoulli(1) == mpq_class(-1, 2));
    CHECK(bernoulli(12) == mpq_class(-691, 2730));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(30) == mpq_class("8615841276005/14322"));
}

TEST_CASE("zeta at integers") {
    mpfr_prec_t wp = ctx30.work_prec();
    Real pi = Real::pi(wp);
    check_close(zeta_int(2, ctx30), pi.pow_long(2).div_long(6));
    check_close(zeta_int(6, ctx30), pi.pow_long(6).div_long(945));
    check_close_abs(zeta_int(3, ctx30),
                    Real::of_string("1.2020569031595942853997381615114", wp), 1e-29);
    CHECK_THROWS_AS(zeta_int(1, ctx30), DomainError);
}

TEST_CASE("even zeta: Bernoulli route vs eta-series route") {
    for (int m = 1; m <= 10; ++m) {
        Real a = zeta_int(2 * m, ctx30);
        Real b = zeta_int_via_eta(2 * m, ctx30);
        check_close_abs(a, b, 1e-30);
    }
}

TEST_CASE("zeta agrees with the mpfr library oracle") {
    for (int n : {2, 3, 5, 8, 13, 21}) {
        Real lib = zeta_mpfr(n, ctx30.work_prec());
        check_close(zeta_int(n, ctx30), lib);
    }
}

TEST_CASE("zeta_bar") {
    mpfr_prec_t wp = ctx30.work_prec();
    check_close(zeta_bar(2, ctx30), -Real::pi(wp).pow_long(2).div_long(12));
    check_close(zeta_bar(3, ctx30), zeta_int(3, ctx30).mul_long(-3).div_long(4));
    // direct alternating-sum oracle at n = 12 (fast convergence)
    Real s(wp);
    for (long m = 200; m >= 1; --m) {
        Real t = Real::of_long(m % 2 ? -1 : 1, wp);
        s += t / Real::of_long(m, wp).pow_long(12);
    }
    s.widen_error(1e-27);
    check_close(zeta_bar(12, ctx30), s);
    CHECK_THROWS_AS(zeta_bar(1, ctx30), DomainError);
}

TEST_CASE("gamma at classical points") {
    mpfr_prec_t wp = ctx30.work_prec();
    check_close(gamma(Real::of_long(1, wp), ctx30), Real::of_long(1, wp));
    check_close(gamma(Real::of_double(0.5, wp), ctx30), Real::pi(wp).sqrt());
    check_close(gamma(Real::of_long(7, wp), ctx30), Real::of_long(720, wp));

    // reflection product Gamma(1/2-x) Gamma(1/2+x) = pi / cos(pi x) at x = 1/5
    Real x = Real::of_long(1, wp).div_long(5);
    Real lhs = gamma(Real::of_double(0.5, wp) - x, ctx30) *
               gamma(Real::of_double(0.5, wp) + x, ctx30);
    Real rhs = Real::pi(wp) / (Real::pi(wp) * x).cos();
    check_close(lhs, rhs);
}

TEST_CASE("gamma matches the mpfr library oracle on the real axis") {
    mpfr_prec_t wp = ctx30.work_prec();
    std::mt19937 rng(20240511);
    std::uniform_real_distribution<double> dist(0.05, 6.0);
    for (int i = 0; i < 20; ++i) {
        double x = dist(rng);
        Real lib(wp);
        Real xr = Real::of_double(x, wp);
        mpfr_gamma(lib.raw(), xr.raw(), MPFR_RNDN);
        lib.set_error_bound(2 * lib.ulp());
        check_close(gamma(xr, ctx30), lib);
    }
}

TEST_CASE("gamma functional equation on random complex points") {
    mpfr_prec_t wp = ctx30.work_prec();
    std::mt19937 rng(987654321);
    std::uniform_real_distribution<double> re_d(0.1, 5.0), im_d(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        Complex z(Real::of_double(re_d(rng), wp), Real::of_double(im_d(rng), wp));
        Complex lhs = gamma(z + Complex::of_long(1, wp), ctx30);
        Complex rhs = z * gamma(z, ctx30);
        Real diff = (lhs - rhs).abs();
        CHECK(diff.to_double() <= lhs.error_bound() + rhs.error_bound() + 1e-50);
    }
}

TEST_CASE("error soundness: doubling digits moves values less than the bound") {
    std::mt19937 rng(13579);
    std::uniform_real_distribution<double> dist(0.1, 4.0);
    PrecisionContext hi(60);
    for (int i = 0; i < 50; ++i) {
        double x = dist(rng);
        int pick = i % 3;
        Real v1(ctx30.work_prec()), v2(hi.work_prec());
        if (pick == 0) {
            v1 = gamma(Real::of_double(x, ctx30.work_prec()), ctx30);
            v2 = gamma(Real::of_double(x, hi.work_prec()), hi);
        } else if (pick == 1) {
            int n = 2 + (i % 9);
            v1 = zeta_int(n, ctx30);
            v2 = zeta_int(n, hi);
        } else {
            v1 = Real::of_double(x, ctx30.work_prec()).exp().log().sqrt();
            v2 = Real::of_double(x, hi.work_prec()).exp().log().sqrt();
        }
        CHECK((v1 - v2).abs().to_double() <= v1.error_bound() + 1e-58);
    }
}

TEST_CASE("power series operations") {
    mpfr_prec_t wp = ctx30.work_prec();

    PowerSeries<Real> x(3, wp);
    x[1] = Real::of_long(1, wp);
    auto ex = ps_exp(x);
    check_close(ex[0], Real::of_long(1, wp));
    check_close(ex[1], Real::of_long(1, wp));
    check_close(ex[2], Real::of_double(0.5, wp));
    check_close(ex[3], Real::of_long(1, wp).div_long(6));

    PowerSeries<Real> onemx(3, wp);
    onemx[0] = Real::of_long(1, wp);
    onemx[1] = Real::of_long(-1, wp);
    auto geo = ps_recip(onemx);
    for (int i = 0; i <= 3; ++i) check_close(geo[i], Real::of_long(1, wp));

    PowerSeries<Real> f(4, wp);
    for (int i = 0; i <= 4; ++i) f[i] = Real::of_long(i + 2, wp);
    auto scaled = ps_scale_arg(f, Real::of_double(0.5, wp));
    check_close(ps_coeff(scaled, 4), Real::of_long(6, wp).div_long(16));
    CHECK_THROWS_AS(ps_coeff(scaled, 5), DomainError);

    // mul: associative and commutative up to truncation order
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 5; ++trial) {
        PowerSeries<Real> a(6, wp), b(6, wp), c(6, wp);
        for (int i = 0; i <= 6; ++i) {
            a[i] = Real::of_long(coeff(rng), wp);
            b[i] = Real::of_long(coeff(rng), wp);
            c[i] = Real::of_long(coeff(rng), wp);
        }
        auto ab = ps_mul(a, b);
        auto ba = ps_mul(b, a);
        auto abc1 = ps_mul(ps_mul(a, b), c);
        auto abc2 = ps_mul(a, ps_mul(b, c));
        for (int i = 0; i <= 6; ++i) {
            check_close(ab[i], ba[i]);
            check_close(abc1[i], abc2[i]);
        }
    }
}

TEST_CASE("monotone precision: one more digit at least halves the bound") {
    for (int d : {20, 30, 40}) {
        Real a = zeta_int(3, PrecisionContext(d));
        Real b = zeta_int(3, PrecisionContext(d + 1));
        CHECK(b.error_bound() <= a.error_bound() / 2);
        Real g1 = gamma(Real::of_double(1.25, PrecisionContext(d).work_prec()),
                        PrecisionContext(d));
        Real g2 = gamma(Real::of_double(1.25, PrecisionContext(d + 1).work_prec()),
                        PrecisionContext(d + 1));
        CHECK(g2.error_bound() <= g1.error_bound() / 2);
    }
}

TEST_CASE("rational helpers") {
    CHECK(rational_pow(mpq_class(1, 2), 4) == mpq_class(1, 16));
    CHECK(rational_pow(mpq_class(2, 3), -2) == mpq_class(9, 4));
    CHECK(parse_rational("3/4") == mpq_class(3, 4));
    CHECK_THROWS_AS(parse_rational("x/y"), ParseError);
    mpq_class q;
    CHECK(rationalize(0.33333333333333331, 1000000000L, 1e-12, &q));
    CHECK(q == mpq_class(1, 3));
    CHECK(rationalize(40247.0 / 353792.0, 1000000000L, 1e-12, &q));
    CHECK(q == mpq_class(40247, 353792));
}
