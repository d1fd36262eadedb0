#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tzeta/error.hpp"
#include "tzeta/hypergeom.hpp"
#include "tzeta/rational.hpp"
#include "tzeta/special.hpp"

using namespace tzeta;
using tzeta::testutil::check_close;

namespace {
const PrecisionContext ctx30(30);
const mpfr_prec_t wp = ctx30.work_prec();

Complex creal(const Real& x) { return Complex(x, Real::of_long(0, x.prec())); }
Complex clong(long v) { return Complex::of_long(v, wp); }
}  // namespace

TEST_CASE("pfq classical closed forms") {
    // 2F1(1,1;2;1/2) = 2 log 2
    PFQSpec s;
    s.upper = {clong(1), clong(1)};
    s.lower = {clong(2)};
    s.z = creal(Real::of_double(0.5, wp));
    check_close(pfq(s, ctx30).re(), Real::log2_const(wp).ldexp(1));

    // 1F0(1;;1/2) = 2 (geometric)
    PFQSpec g;
    g.upper = {clong(1)};
    g.z = creal(Real::of_double(0.5, wp));
    check_close(pfq(g, ctx30).re(), Real::of_long(2, wp));
}

TEST_CASE("pfq at unit argument: Gauss summation oracle") {
    // 2F1(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))
    auto gauss = [&](const mpq_class& a, const mpq_class& b, const mpq_class& c) {
        Real ar = Real::of_rational(a, wp), br = Real::of_rational(b, wp),
             cr = Real::of_rational(c, wp);
        Real num = gamma(cr, ctx30) * gamma(cr - ar - br, ctx30);
        Real den = gamma(cr - ar, ctx30) * gamma(cr - br, ctx30);
        return num / den;
    };
    PFQSpec s;
    s.upper = {creal(Real::of_rational(mpq_class(1, 3), wp)),
               creal(Real::of_rational(mpq_class(1, 4), wp))};
    s.lower = {clong(2)};
    s.z = clong(1);
    check_close(pfq(s, ctx30).re(), gauss(mpq_class(1, 3), mpq_class(1, 4), mpq_class(2)));

    // another excess-1 instance: 2F1(1/2, 1/2; 2; 1) = 8 / (3 pi)... wait:
    // Gamma(2)Gamma(1)/Gamma(3/2)^2 = 1/( (sqrt(pi)/2)^2 ) = 4/pi
    PFQSpec s2;
    s2.upper = {creal(Real::of_rational(mpq_class(1, 2), wp)),
                creal(Real::of_rational(mpq_class(1, 2), wp))};
    s2.lower = {clong(2)};
    s2.z = clong(1);
    check_close(pfq(s2, ctx30).re(), gauss(mpq_class(1, 2), mpq_class(1, 2), mpq_class(2)));

    // complex parameters, conjugate pair: value is real
    Complex i5(Real::of_long(0, wp), Real::of_rational(mpq_class(1, 5), wp));
    PFQSpec s3;
    s3.upper = {clong(1) + i5, clong(1) - i5};
    s3.lower = {clong(3)};
    s3.z = clong(1);
    Complex v = pfq(s3, ctx30);
    CHECK(v.im().mag() <= v.im().error_bound() + 1e-40);
}

TEST_CASE("pfq rejects divergent requests") {
    PFQSpec s;
    s.upper = {clong(2), clong(2)};
    s.lower = {clong(2)};
    s.z = clong(1);  // excess -1
    CHECK_THROWS_AS(pfq(s, ctx30), DivergentError);
    PFQSpec p;
    p.upper = {clong(1), clong(1)};
    p.lower = {clong(-3)};  // nonpositive integer below
    p.z = creal(Real::of_double(0.5, wp));
    CHECK_THROWS_AS(pfq(p, ctx30), DomainError);
}

TEST_CASE("error soundness of unit-argument pfq under digit doubling") {
    PrecisionContext hi(60);
    PFQSpec lo_s, hi_s;
    for (auto* s : {&lo_s, &hi_s}) {
        mpfr_prec_t p = (s == &lo_s) ? wp : hi.work_prec();
        s->upper = {Complex::of_long(1, p),
                    Complex(Real::of_rational(mpq_class(1, 3), p), Real::of_long(0, p))};
        s->lower = {Complex(Real::of_rational(mpq_class(7, 3), p), Real::of_long(0, p))};
        s->z = Complex::of_long(1, p);
    }
    Complex v1 = pfq(lo_s, ctx30);
    Complex v2 = pfq(hi_s, hi);
    CHECK((v1 - v2).abs().to_double() <= v1.error_bound() + 1e-55);
    CHECK(v1.error_bound() <= 1e-31);
}

TEST_CASE("generating-series lemmas: closed form vs series") {
    for (const char* xs : {"1/10", "1/5"}) {
        Real x = Real::of_rational(parse_rational(xs), wp);
        auto a = gs_zeta_half_33n2(x, 0, ctx30);
        CHECK(a.residual().to_double() <=
              a.closed.error_bound() + a.series.error_bound() + 1e-32);
        CHECK(a.closed.im().mag() <= a.closed.error_bound() + 1e-35);

        auto b = gs_t_3n(x, ctx30);
        CHECK(b.residual().to_double() <=
              b.closed.error_bound() + b.series.error_bound() + 1e-32);

        auto c = gs_zstar_23n(x, 0, ctx30);
        CHECK(c.residual().to_double() <=
              c.closed.error_bound() + c.series.error_bound() + 1e-32);

        auto d = gs_t_3n2(x, 0, ctx30);
        CHECK(d.residual().to_double() <=
              d.closed.error_bound() + d.series.error_bound() + 1e-32);

        // conjugate symmetry: parameters come in conjugate pairs, so each
        // closed form is real at real x
        for (const auto* dv : {&a, &b, &c, &d})
            CHECK(dv->closed.im().mag() <= dv->closed.error_bound() + 1e-35);
    }
}

TEST_CASE("gs small-x behavior") {
    // leading term of the zeta-half series is -2 zeta(2) x^2 (1 + O(x^3))
    Real x = Real::of_rational(mpq_class(1, 100), wp);
    auto a = gs_zeta_half_33n2(x, 4, ctx30);
    double expect = -2e-4 * 1.6449340668482264;
    CHECK(a.series.to_double() == doctest::Approx(expect).epsilon(1e-4));
    CHECK(a.closed.re().to_double() == doctest::Approx(expect).epsilon(1e-4));
    // t({3}^n) series at x -> 0 is 1
    auto b = gs_t_3n(Real::of_rational(mpq_class(1, 1000), wp), ctx30);
    CHECK(b.series.to_double() == doctest::Approx(1.0).epsilon(1e-6));
    // zstar series leading coefficient: zeta*(2) x^2 = zeta(2) x^2
    auto c = gs_zstar_23n(Real::of_rational(mpq_class(1, 100), wp), 3, ctx30);
    CHECK(c.series.to_double() == doctest::Approx(1.6449340668e-4).epsilon(1e-5));
    // t({3}^n,2) series leading coefficient: t(2) (2x)^2 = 3 zeta(2) x^2
    auto d = gs_t_3n2(Real::of_rational(mpq_class(1, 100), wp), 3, ctx30);
    CHECK(d.series.to_double() == doctest::Approx(3 * 1.6449340668e-4 / 4 * 4).epsilon(1e-5));
}

TEST_CASE("the 4F3 identity") {
    for (const char* xs : {"1/10", "1/5", "3/10"}) {
        Real x = Real::of_rational(parse_rational(xs), wp);
        VerificationReport r = check_4f3_identity(x, ctx30);
        INFO(report_text(r));
        CHECK(r.pass);
        CHECK(r.residual.to_double() <= 1e-20);
    }
    CHECK_THROWS_AS(check_4f3_identity(Real::of_double(0.7, wp), ctx30), DomainError);
}
