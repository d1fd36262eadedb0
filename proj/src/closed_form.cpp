#include "tzeta/closed_form.hpp"

#include <gmpxx.h>

#include "tzeta/error.hpp"
#include "tzeta/nested_sum.hpp"
#include "tzeta/rational.hpp"
#include "tzeta/special.hpp"

namespace tzeta {

namespace {

mpq_class binom(long n, long r) {
    if (r < 0 || r > n || n < 0) return mpq_class(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(r));
    return mpq_class(b);
}

mpq_class half_pow(long e) { return rational_pow(mpq_class(1, 2), e); }

Real rq(const mpq_class& q, mpfr_prec_t wp) { return Real::of_rational(q, wp); }

}  // namespace

ZSeries z_series(int s, int N, const PrecisionContext& ctx) {
    if (s < 2 || N < 1) throw DomainError("z_series: s >= 2, N >= 1 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    PowerSeries<Real> g(N, wp);
    for (int k = 1; k <= N; ++k) {
        Real c = zeta_int(s * k, ctx).div_long(k);
        g[k] = (k % 2 == 0) ? -c : c;
    }
    return ZSeries{s, N, ps_exp(g)};
}

PowerSeries<Real> repeated_star_series(int s, int N, const PrecisionContext& ctx) {
    ZSeries z = z_series(s, N, ctx);
    const mpfr_prec_t wp = z.series.prec();
    return ps_recip(ps_scale_arg(z.series, Real::of_long(-1, wp)));
}

PowerSeries<Real> repeated_t_series(int s, int N, const PrecisionContext& ctx) {
    ZSeries z = z_series(s, N, ctx);
    const mpfr_prec_t wp = z.series.prec();
    return ps_mul(z.series, ps_recip(ps_scale_arg(z.series, Real::pow2(-s, wp))));
}

Real prop21_coeff(int a, int b, const PrecisionContext& ctx) {
    if (a < 3 || b < 1) throw DomainError("prop21: a >= 3, b >= 1 required");
    ZSeries z = z_series(a, b, ctx);
    const mpfr_prec_t wp = z.series.prec();
    auto zm = ps_scale_arg(z.series, Real::of_long(-1, wp));
    auto r = ps_recip(ps_scale_arg(z.series, -Real::pow2(-a, wp)));
    auto f = ps_mul(zm, ps_mul(r, r));
    return (-ps_coeff(f, b)).ldexp(2 * b - 1);
}

Real prop21_cotangent(int m, int b, const PrecisionContext& ctx) {
    if (m < 2 || b < 1) throw DomainError("prop21 cotangent: a = 2m >= 4, b >= 1 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    const int N = m * b;  // order in v = (z/2)^2
    PowerSeries<Complex> prod(N, wp);
    prod[0] = Complex::of_long(1, wp);
    Real two_pi = Real::pi(wp).ldexp(1);
    for (int j = 0; j < m; ++j) {
        PowerSeries<Complex> f(N, wp);
        f[0] = Complex::of_long(1, wp);
        for (int k = 1; k <= N; ++k) {
            // -2 zeta(2k) omega^{kj}, omega = exp(2 pi i / m)
            Real ang = two_pi.mul_long((k * j) % m).div_long(m);
            Complex w(ang.cos(), ang.sin());
            f[k] = Real(zeta_int(2 * k, ctx).mul_long(-2)) * w;
        }
        prod = ps_mul(prod, f);
    }
    Complex h = ps_coeff(prod, N);
    Real val = -h.re();
    val.widen_error(h.im().mag() + h.im().error_bound());
    // [z^{2mb}] picks up 4^{-mb} from v = z^2/4
    return val.ldexp(2 * b - 1 - 2 * m * b);
}

Real prop21_qform(int a, int b, const PrecisionContext& ctx) {
    if (a < 3 || b < 1) throw DomainError("prop21: a >= 3, b >= 1 required");
    std::vector<Real> xs;
    xs.reserve(static_cast<std::size_t>(b));
    for (int j = 1; j <= b; ++j) xs.push_back(zeta_bar(a * j, ctx));
    return -q_poly(b, xs).ldexp(2 * b - 1);
}

Real parity_double_zeta(int a, int b, const PrecisionContext& ctx) {
    if (a < 1 || b < 2) throw DomainError("parity: a >= 1, b >= 2 required");
    const int w = a + b;
    if (w % 2 == 0) throw DomainError("parity reduction needs odd weight");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    const int sgn_a = (a % 2 == 0) ? 1 : -1;

    mpq_class c_w = mpq_class(-1, 2) -
                    mpq_class(sgn_a, 2) * (binom(w - 1, a - 1) + binom(w - 1, b - 1));
    Real acc = rq(c_w, wp) * zeta_int(w, ctx);
    if (b % 2 == 0 && a >= 2)  // zeta(1) term is stuffle-regularized to 0
        acc += zeta_int(a, ctx) * zeta_int(b, ctx);
    for (int s = 1; 2 * s + 2 <= w; ++s) {
        const int k = w - 2 * s;
        mpq_class c = binom(k - 1, a - 1) + binom(k - 1, b - 1);
        if (c == 0) continue;
        if (sgn_a < 0) c = -c;
        acc += rq(c, wp) * zeta_int(2 * s, ctx) * zeta_int(k, ctx);
    }
    return acc;
}

Real parity_double_t(int a, int b, const PrecisionContext& ctx) {
    if (a < 1 || b < 2) throw DomainError("parity: a >= 1, b >= 2 required");
    const int w = a + b;
    if (w % 2 == 0) throw DomainError("parity reduction needs odd weight");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    const int sgn_a = (a % 2 == 0) ? 1 : -1;

    Real acc = rq(mpq_class(-1, 2) * (1 - half_pow(w)), wp) * zeta_int(w, ctx);
    if (b % 2 == 0) {
        Real tb = rq(1 - half_pow(b), wp) * zeta_int(b, ctx);
        Real ta = (a == 1) ? Real::log2_const(wp)  // regularized t(1)
                           : rq(1 - half_pow(a), wp) * zeta_int(a, ctx);
        acc += ta * tb;
    }
    for (int s = 1; 2 * s + 2 <= w; ++s) {
        const int k = w - 2 * s;
        mpq_class c = binom(k - 1, a - 1) + binom(k - 1, b - 1);
        if (c == 0) continue;
        c *= (1 - rational_pow(mpq_class(1, 2), 2 * s)) * half_pow(w - 2 * s);
        if (sgn_a < 0) c = -c;
        acc += rq(c, wp) * zeta_int(2 * s, ctx) * zeta_int(k, ctx);
    }
    return acc;
}

Real t_two_k(int k, const PrecisionContext& ctx) {
    if (k < 2) throw DomainError("t_two_k: k >= 2 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    Real acc(wp);
    for (int i = 2; i + 2 <= k + 2; ++i) {
        const int j = k + 2 - i;
        acc += rq(mpq_class(i - 1) * half_pow(i + 1), wp) * eval_mzv(Index({i, j}), ctx);
    }
    acc += eval_mzv(Index({2, k}), ctx).ldexp(-k - 2);
    acc += (zeta_int(k, ctx) * zeta_int(2, ctx)).ldexp(-k - 1);
    acc -= rq(mpq_class(k * (k + 5)) * half_pow(k + 4), wp) * zeta_int(k + 2, ctx);
    return acc;
}

Real prop22_z114(int n, const PrecisionContext& ctx) {
    if (n < 0) throw DomainError("prop22: n >= 0 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    Real acc(wp);
    for (int i = 2; i + 2 <= n + 4; ++i) {
        const int j = n + 4 - i;
        acc += rq(mpq_class(1 - i) * half_pow(i - 2), wp) * eval_mzv(Index({i, j}), ctx);
    }
    acc += rq(mpq_class((n + 2) * (n + 7)) * half_pow(n + 3), wp) * zeta_int(n + 4, ctx);
    return acc;
}

Real prop22_z114_odd(int m, const PrecisionContext& ctx) {
    if (m < 0) throw DomainError("prop22 odd: m >= 0 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    Real acc(wp);
    for (int i = 1; 2 * i + 2 <= 2 * m + 5; ++i) {
        const int j = 2 * m + 5 - 2 * i;
        mpq_class c = mpq_class(8) * (1 - rational_pow(mpq_class(1, 2), 2 * i - 1)) *
                      mpq_class(1 - j) * half_pow(j);
        acc += rq(c, wp) * zeta_int(2 * i, ctx) * zeta_int(j, ctx);
    }
    mpq_class tail = mpq_class(4) - 3 * half_pow(2 * m + 1) -
                     mpq_class(m * (2 * m + 9)) * half_pow(2 * m + 3);
    acc += rq(tail, wp) * zeta_int(2 * m + 5, ctx);
    return acc;
}

Real prop22_z3112(int n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("prop22: n >= 1 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    Real acc(wp);
    for (int i = 2; i + 2 <= n + 4; ++i) {
        const int j = n + 4 - i;
        acc += rq(mpq_class(i - 1) * half_pow(i - 2), wp) * eval_mzv(Index({i, j}), ctx);
    }
    acc -= rq(mpq_class(4) - half_pow(n - 1), wp) * zeta_int(2, ctx) * zeta_int(n + 2, ctx);
    mpq_class tail = mpq_class(8) - half_pow(n) -
                     mpq_class((n + 2) * (n + 7)) * half_pow(n + 3);
    acc += rq(tail, wp) * zeta_int(n + 4, ctx);
    return acc;
}

Real prop22_z3112_even(int m, const PrecisionContext& ctx) {
    if (m < 0) throw DomainError("prop22 even: m >= 0 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    Real acc(wp);
    for (int i = 1; 2 * i + 2 <= 2 * m + 5; ++i) {
        const int j = 2 * m + 5 - 2 * i;
        mpq_class c = mpq_class(8) * (1 - rational_pow(mpq_class(1, 2), 2 * i - 1)) *
                      mpq_class(j - 1) * half_pow(j);
        acc += rq(c, wp) * zeta_int(2 * i, ctx) * zeta_int(j, ctx);
    }
    acc -= rq(mpq_class(4) - half_pow(2 * m), wp) * zeta_int(2, ctx) * zeta_int(2 * m + 3, ctx);
    mpq_class tail = mpq_class(4) + half_pow(2 * m) +
                     mpq_class(m * (2 * m + 9)) * half_pow(2 * m + 3);
    acc += rq(tail, wp) * zeta_int(2 * m + 5, ctx);
    return acc;
}

Real prop22_sum(int n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("prop22 sum: n >= 1 required");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    Real a = rq(mpq_class(-4) * (1 - half_pow(n + 1)), wp) * zeta_int(2, ctx) *
             zeta_int(n + 2, ctx);
    Real b = rq(mpq_class(8) - half_pow(n), wp) * zeta_int(n + 4, ctx);
    return a + b;
}

Real prop23(int i, int j, const PrecisionContext& ctx) {
    if (i < 0 || j < 0) throw DomainError("prop23: i, j >= 0 required");
    if ((i + j) % 2 != 0) throw DomainError("prop23 needs i + j even");
    const mpfr_prec_t wp = ctx.work_prec() + 16;
    const int w = i + j + 5;
    const int sgn_i = (i % 2 == 0) ? 1 : -1;
    const int sgn_j = (j % 2 == 0) ? 1 : -1;

    Real acc(wp);
    for (int s = 1; 2 * s + 2 <= w; ++s) {
        const int k = w - 2 * s;
        mpq_class num = mpq_class(sgn_j) * (rational_pow(mpq_class(2), 2 * s) - 1) -
                        mpq_class(sgn_i);
        mpq_class c = num * half_pow(i + j + 2) * (binom(k - 1, i + 1) + binom(k - 1, j + 2));
        if (c == 0) continue;
        acc += rq(c, wp) * zeta_int(2 * s, ctx) * zeta_int(k, ctx);
    }
    {
        mpq_class c = (rational_pow(mpq_class(2), j + 3) - 2) * half_pow(i + j + 2);
        if (i % 2 == 0)
            c -= mpq_class(8) - 2 * half_pow(i) - half_pow(j);
        acc += rq(c, wp) * zeta_int(i + 2, ctx) * zeta_int(j + 3, ctx);
    }
    {
        mpq_class c = rational_pow(mpq_class(2), w) - 2 +
                      mpq_class(sgn_i) * (binom(w - 1, i + 1) + binom(w - 1, j + 2));
        c *= half_pow(i + j + 3);
        acc += rq(c, wp) * zeta_int(w, ctx);
    }
    return acc;
}

}  // namespace tzeta
