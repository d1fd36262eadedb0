#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tzeta/closed_form.hpp"
#include "tzeta/error.hpp"
#include "tzeta/nested_sum.hpp"
#include "tzeta/special.hpp"

using namespace tzeta;
using tzeta::testutil::check_close;

namespace {
const PrecisionContext ctx30(30);
const mpfr_prec_t wp = ctx30.work_prec();

Real zeta_multiple(const mpq_class& q, int w) {
    return Real::of_rational(q, wp) * zeta_int(w, ctx30);
}
}  // namespace

TEST_CASE("z_series coefficients") {
    ZSeries z2 = z_series(2, 5, ctx30);
    check_close(ps_coeff(z2.series, 1), zeta_int(2, ctx30));
    // sine-product closed form: zeta({2}^n) = pi^{2n} / (2n+1)!
    long fact = 1;
    for (int n = 1; n <= 5; ++n) {
        fact *= (2 * n) * (2 * n + 1);
        check_close(ps_coeff(z2.series, n), Real::pi(wp).pow_long(2 * n).div_long(fact));
    }
    ZSeries z6 = z_series(6, 2, ctx30);
    check_close(ps_coeff(z6.series, 1), zeta_int(6, ctx30));
    // direct nested-sum cross-check at depth 2
    check_close(ps_coeff(z2.series, 2), eval_mzv(Index({2, 2}), ctx30));
}

TEST_CASE("repeated star / t series") {
    auto star = repeated_star_series(2, 3, ctx30);
    check_close(ps_coeff(star, 0), Real::of_long(1, wp));
    check_close(ps_coeff(star, 1), zeta_int(2, ctx30));
    check_close(ps_coeff(star, 2), eval_interpolated(Index({2, 2}), mpq_class(1), ctx30));
    auto ts = repeated_t_series(2, 2, ctx30);
    check_close(ps_coeff(ts, 1), zeta_int(2, ctx30).mul_long(3).div_long(4));
    check_close(ps_coeff(ts, 2), eval_mtv(Index({2, 2}), ctx30));
}

TEST_CASE("complete symmetric polynomials") {
    Real x1 = Real::of_long(2, wp), x2 = Real::of_long(-3, wp), x3 = Real::of_long(5, wp);
    check_close(q_poly(1, std::vector<Real>{x1}), x1);
    // Q_2 = (x1^2 + x2)/2
    check_close(q_poly(2, std::vector<Real>{x1, x2}), (x1 * x1 + x2).div_long(2));
    // Q_3 = (x1^3 + 3 x1 x2 + 2 x3)/6
    check_close(q_poly(3, std::vector<Real>{x1, x2, x3}),
                (x1.pow_long(3) + (x1 * x2).mul_long(3) + x3.mul_long(2)).div_long(6));
    check_close(q_poly(0, std::vector<Real>{}), Real::of_long(1, 64));
}

TEST_CASE("zeta-half(1,...,2) family: pinned rational multiples") {
    check_close(prop21_coeff(6, 1, ctx30), zeta_multiple(mpq_class(31, 16), 6));
    check_close(prop21_coeff(6, 2, ctx30), zeta_multiple(mpq_class(40247, 353792), 12));
    check_close(prop21_coeff(6, 3, ctx30), zeta_multiple(mpq_class(1595681, 224599040), 18));
}

TEST_CASE("zeta-half(1,...,2) family: routes agree") {
    for (int a = 3; a <= 6; ++a)
        for (int b = 1; b <= 3; ++b) {
            check_close(prop21_qform(a, b, ctx30), prop21_coeff(a, b, ctx30));
            if (a % 2 == 0 && a >= 4)
                check_close(prop21_cotangent(a / 2, b, ctx30), prop21_coeff(a, b, ctx30));
        }
    // qform at b = 1 is -2 zeta(a bar)
    check_close(prop21_qform(6, 1, ctx30), zeta_bar(6, ctx30).mul_long(-2));
    check_close(prop21_qform(3, 1, ctx30), zeta_int(3, ctx30).mul_long(3).div_long(2));
}

TEST_CASE("zeta-half(1,...,2) family vs interpolated nested sum") {
    // explicit index (1, {{1}^{a-3},3}^{b-1}, {1}^{a-3}, 2)
    for (auto [a, b] : {std::pair{3, 2}, {4, 2}, {5, 1}, {3, 3}}) {
        std::vector<int> parts{1};
        for (int r = 0; r < b - 1; ++r) {
            parts.insert(parts.end(), static_cast<std::size_t>(a - 3), 1);
            parts.push_back(3);
        }
        parts.insert(parts.end(), static_cast<std::size_t>(a - 3), 1);
        parts.push_back(2);
        check_close(prop21_coeff(a, b, ctx30), eval_zeta_half(Index(parts), ctx30));
    }
}

TEST_CASE("parity reduction of double zeta values") {
    check_close(parity_double_zeta(2, 3, ctx30), eval_mzv(Index({2, 3}), ctx30));
    check_close(parity_double_zeta(1, 2, ctx30), zeta_int(3, ctx30));  // Euler
    check_close(parity_double_zeta(3, 4, ctx30), eval_mzv(Index({3, 4}), ctx30));
    for (int w = 5; w <= 11; w += 2)
        for (int a = 1; a + 2 <= w; ++a)
            check_close(parity_double_zeta(a, w - a, ctx30), eval_mzv(Index({a, w - a}), ctx30));
    CHECK_THROWS_AS(parity_double_zeta(2, 2, ctx30), DomainError);
}

TEST_CASE("parity reduction of double t values") {
    check_close(parity_double_t(2, 3, ctx30), eval_mtv(Index({2, 3}), ctx30));
    check_close(parity_double_t(3, 4, ctx30), eval_mtv(Index({3, 4}), ctx30));
    // t(1,2) = -(7/16) zeta(3) + (pi^2/8) log 2, consistent with tt(1,2)/8
    Real want = zeta_int(3, ctx30).mul_long(-7).div_long(16) +
                (Real::pi(wp).pow_long(2) * Real::log2_const(wp)).div_long(8);
    check_close(parity_double_t(1, 2, ctx30), want);
    check_close(parity_double_t(1, 2, ctx30),
                eval_rescaled(RescaledFamily::t_tilde, Index({1, 2}), ctx30).ldexp(-3));
    for (int w = 5; w <= 11; w += 2)
        for (int a = 1; a + 2 <= w; ++a)
            check_close(parity_double_t(a, w - a, ctx30), eval_mtv(Index({a, w - a}), ctx30));
}

TEST_CASE("uniform t(2,k)") {
    for (int k = 2; k <= 6; ++k)
        check_close(t_two_k(k, ctx30), eval_mtv(Index({2, k}), ctx30));
    // odd k+2: also matches the parity route
    check_close(t_two_k(3, ctx30), parity_double_t(2, 3, ctx30));
    check_close(t_two_k(5, ctx30), parity_double_t(2, 5, ctx30));
    CHECK_THROWS_AS(t_two_k(1, ctx30), DomainError);
}

TEST_CASE("zeta-half({1}^n, 4)") {
    // n = 0 instantiation: sum_{i+j=4} (1-i)/2^{i-2} zeta(i,j) + (2*7/2^3) zeta(4)
    Real n0 = eval_mzv(Index({2, 2}), ctx30).mul_long(-1) +
              zeta_int(4, ctx30).mul_long(14).div_long(8);
    check_close(prop22_z114(0, ctx30), n0);
    for (int n = 0; n <= 6; ++n) {
        std::vector<int> parts(static_cast<std::size_t>(n), 1);
        parts.push_back(4);
        check_close(prop22_z114(n, ctx30), eval_zeta_half(Index(parts), ctx30));
    }
    for (int m = 0; m <= 2; ++m)
        check_close(prop22_z114_odd(m, ctx30), prop22_z114(2 * m + 1, ctx30));
}

TEST_CASE("zeta-half(3, {1}^{n-1}, 2)") {
    check_close(prop22_z3112(1, ctx30), eval_zeta_half(Index({3, 2}), ctx30));
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> parts{3};
        parts.insert(parts.end(), static_cast<std::size_t>(n - 1), 1);
        parts.push_back(2);
        check_close(prop22_z3112(n, ctx30), eval_zeta_half(Index(parts), ctx30));
    }
    for (int m = 0; m <= 2; ++m)
        check_close(prop22_z3112_even(m, ctx30), prop22_z3112(2 * m + 1, ctx30));
}

TEST_CASE("sum of the two zeta-half families") {
    for (int n = 1; n <= 6; ++n)
        check_close(prop22_z114(n, ctx30) + prop22_z3112(n, ctx30), prop22_sum(n, ctx30));
}

TEST_CASE("zeta-half({1}^i, 3, {1}^j, 2), i+j even") {
    check_close(prop23(0, 0, ctx30), eval_zeta_half(Index({3, 2}), ctx30));
    check_close(prop23(1, 1, ctx30), eval_zeta_half(Index({1, 3, 1, 2}), ctx30));
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            if ((i + j) % 2) continue;
            std::vector<int> parts(static_cast<std::size_t>(i), 1);
            parts.push_back(3);
            parts.insert(parts.end(), static_cast<std::size_t>(j), 1);
            parts.push_back(2);
            check_close(prop23(i, j, ctx30), eval_zeta_half(Index(parts), ctx30));
        }
    CHECK_THROWS_AS(prop23(1, 2, ctx30), DomainError);
}
