#include "tzeta/hypergeom.hpp"

#include <algorithm>
#include <cmath>

#include "tzeta/closed_form.hpp"
#include "tzeta/error.hpp"
#include "tzeta/index.hpp"
#include "tzeta/nested_sum.hpp"
#include "tzeta/special.hpp"

namespace tzeta {

Real DualValue::residual() const {
    Real d = closed.re() - series;
    return (d * d + closed.im() * closed.im()).sqrt();
}

Complex cube_root_unity(mpfr_prec_t prec) {
    Real re = Real::of_long(-1, prec).div_long(2);
    Real im = Real::of_long(3, prec).sqrt().ldexp(-1);
    return Complex(re, im);
}

namespace {

// polynomial prod (n + roots[i]) as ascending coefficients in n
std::vector<Complex> poly_from_roots(const std::vector<Complex>& roots, mpfr_prec_t wp) {
    std::vector<Complex> c{Complex::of_long(1, wp)};
    for (const auto& r : roots) {
        std::vector<Complex> nc(c.size() + 1, Complex(wp));
        for (std::size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];      // * n
            nc[i] += c[i] * r;      // * root
        }
        c = std::move(nc);
    }
    return c;
}

// Tail of sum_{n >= N} t_n for the z = 1 term recurrence
// t_{n+1} = t_n P(n)/Q(n): solve g(n) = 1 + (P/Q)(n) g(n+1) as a
// descending series g(n) = sum_{k >= -1} gamma_k n^-k; then
// T(N) = t_N g(N), truncated at the smallest term.
std::vector<Complex> tail_gammas(const std::vector<Complex>& P,
                                 const std::vector<Complex>& Q, int Kmax,
                                 mpfr_prec_t wp) {
    const int p = static_cast<int>(P.size()) - 1;
    const int size = Kmax + p + 1;  // orders -p .. Kmax
    std::vector<Complex> R(static_cast<std::size_t>(size), Complex(wp));
    for (int d = 0; d <= p; ++d) R[static_cast<std::size_t>(p - d)] = Q[static_cast<std::size_t>(d)];

    std::vector<Complex> gammas;
    std::vector<Complex> col(static_cast<std::size_t>(size), Complex(wp));
    for (int k = -1; k <= Kmax; ++k) {
        for (auto& c : col) c = Complex(wp);
        // Q(n) n^-k: q_d at order k - d
        for (int d = 0; d <= p; ++d) {
            int ord = k - d;
            if (ord >= -p && ord <= Kmax) col[static_cast<std::size_t>(ord + p)] += Q[static_cast<std::size_t>(d)];
        }
        // -P(n) (n+1)^-k
        if (k == -1) {
            for (int d = 0; d <= p; ++d) {
                for (int ord : {-d - 1, -d}) {
                    if (ord >= -p && ord <= Kmax)
                        col[static_cast<std::size_t>(ord + p)] -= P[static_cast<std::size_t>(d)];
                }
            }
        } else {
            // (n+1)^-k = sum_j (-1)^j C(k+j-1, j) v^{k+j}
            mpz_class w(1);
            for (int j = 0; k + j <= Kmax + p; ++j) {
                if (j > 0) {
                    w *= k + j - 1;
                    mpz_divexact_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(j));
                }
                if (k == 0 && j > 0) break;  // (n+1)^0 = 1
                Real wj = Real::of_rational(mpq_class(w), wp);
                if (j % 2 == 1) wj = -wj;
                for (int d = 0; d <= p; ++d) {
                    int ord = k + j - d;
                    if (ord >= -p && ord <= Kmax)
                        col[static_cast<std::size_t>(ord + p)] -= wj * P[static_cast<std::size_t>(d)];
                }
            }
        }
        const int pivot = k - p + 1 + p;  // index of order k-p+1
        Complex g = R[static_cast<std::size_t>(pivot)] / col[static_cast<std::size_t>(pivot)];
        for (int i = pivot; i < size; ++i) R[static_cast<std::size_t>(i)] -= g * col[static_cast<std::size_t>(i)];
        gammas.push_back(g);
    }
    return gammas;
}

// t_N * (gamma_{-1} N + gamma_0 + gamma_1/N + ...), truncated either at the
// smallest term (the series is asymptotic) or once terms drop below working
// precision; running past that point only compounds tracked error bounds.
Complex tail_value(const std::vector<Complex>& gammas, long N, const Complex& tN,
                   mpfr_prec_t wp, double* err_out) {
    Complex acc(wp);
    Complex npow = Complex::of_long(N, wp);  // N^{-k}, starting at k = -1
    Complex invN = Complex::of_long(1, wp).div_long(N);
    double prev = 1e308;
    double min_mag = 1e308;
    double stop = 0;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        Complex term = gammas[i] * npow;
        double m = term.abs().to_double();
        if (i == 0) stop = (m + 1) * std::ldexp(1.0, -static_cast<int>(wp) - 8);
        if (m > prev && m > min_mag * 4) break;  // divergent regime begins
        acc += term;
        prev = m;
        min_mag = std::min(min_mag, m);
        npow *= invN;
        if (m < stop) break;  // below working precision
    }
    double tmag = tN.abs().to_double();
    *err_out = min_mag * tmag * 20.0;
    return tN * acc;
}

Complex excess(const PFQSpec& spec, mpfr_prec_t wp) {
    Complex e(wp);
    for (const auto& b : spec.lower) e += b;
    for (const auto& a : spec.upper) e -= a;
    return e;
}

bool is_unit_argument(const PFQSpec& spec) {
    return spec.z.im().is_zero() && spec.z.re().cmp_long(1) == 0;
}

Complex pfq_direct(const PFQSpec& spec, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_prec() + 32;
    const double zmag = spec.z.abs().to_double();
    double bmax = 1;
    for (const auto& a : spec.upper) bmax = std::max(bmax, a.abs().to_double());
    for (const auto& b : spec.lower) bmax = std::max(bmax, b.abs().to_double());
    if (spec.upper.size() > spec.lower.size() + 1 ||
        (spec.upper.size() == spec.lower.size() + 1 && zmag >= 1 - 1e-12))
        throw DivergentError("pfq: series does not converge at this argument");

    Complex term = Complex::of_long(1, wp);
    Complex acc = term;
    const double eps = std::ldexp(1.0, -static_cast<int>(wp) - 2);
    for (long n = 0; n < ctx.max_terms; ++n) {
        Complex num = term;
        for (const auto& a : spec.upper) num *= (a + Complex::of_long(n, wp));
        for (const auto& b : spec.lower) num /= (b + Complex::of_long(n, wp));
        term = num * spec.z;
        term = term.div_long(n + 1);
        acc += term;
        double tm = term.abs().to_double();
        // geometric tail once the ratio bound drops below 15/16
        double n_d = static_cast<double>(n + 2);
        double rho = zmag;
        for (std::size_t i = 0; i < spec.upper.size(); ++i) rho *= 1.0 + bmax / n_d;
        for (std::size_t i = 0; i <= spec.lower.size(); ++i) rho /= std::max(0.5, 1.0 - bmax / n_d);
        if (rho < 0.9375 && tm <= eps * (acc.abs().to_double() + 1)) {
            acc.re().widen_error(tm * rho / (1 - rho) + tm);
            acc.im().widen_error(tm * rho / (1 - rho) + tm);
            return acc;
        }
    }
    throw MaxTermsError("pfq: max_terms exceeded before the tail bound engaged");
}

Complex pfq_unit(const PFQSpec& spec, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_prec() + 48;
    Complex sigma = excess(spec, wp);
    if (sigma.re().to_double() <= 1e-9)
        throw DivergentError("pfq at unit argument needs positive parameter excess");

    double bmax = 1;
    for (const auto& a : spec.upper) bmax = std::max(bmax, a.abs().to_double());
    for (const auto& b : spec.lower) bmax = std::max(bmax, b.abs().to_double());

    const long N = std::max<long>({80, 3L * ctx.target_digits + 40,
                                   static_cast<long>(8 * bmax) + 16});
    const long N2 = N + N / 2;
    // terms of the descending series fall roughly like (c/N)^k; this many
    // coefficients reach working precision with headroom to spare
    const int Kmax = std::min<int>(
        static_cast<int>(static_cast<double>(wp) * 0.6931 /
                         std::log(static_cast<double>(N) / 8.0)) + 24,
        420);
    if (N2 >= ctx.max_terms) throw MaxTermsError("pfq: max_terms too small for the unit-argument tail");

    std::vector<Complex> P = poly_from_roots(spec.upper, wp);
    std::vector<Complex> qroots = spec.lower;
    qroots.push_back(Complex::of_long(1, wp));
    std::vector<Complex> Q = poly_from_roots(qroots, wp);

    Complex term = Complex::of_long(1, wp);
    Complex S1(wp), S2(wp), t1(wp), t2(wp);
    for (long n = 0; n < N2; ++n) {
        if (n == N) t1 = term;
        if (n < N)
            S1 += term;
        S2 += term;
        Complex num = term;
        for (const auto& a : spec.upper) num *= (a + Complex::of_long(n, wp));
        for (const auto& b : spec.lower) num /= (b + Complex::of_long(n, wp));
        term = num.div_long(n + 1);
    }
    t2 = term;

    std::vector<Complex> gammas = tail_gammas(P, Q, Kmax, wp);
    double e1 = 0, e2 = 0;
    Complex v1 = S1 + tail_value(gammas, N, t1, wp, &e1);
    Complex v2 = S2 + tail_value(gammas, N2, t2, wp, &e2);
    double cross = (v1 - v2).abs().to_double();
    v1.re().widen_error(e1 + cross);
    v1.im().widen_error(e1 + cross);
    return v1;
}

}  // namespace

Complex pfq(const PFQSpec& spec, const PrecisionContext& ctx) {
    for (const auto& b : spec.lower) {
        double br = b.re().to_double();
        if (std::fabs(b.im().to_double()) < 1e-12 && br < 0.5 &&
            std::fabs(br - std::round(br)) < 1e-12)
            throw DomainError("pfq: lower parameter at a nonpositive integer");
    }
    return is_unit_argument(spec) && spec.upper.size() == spec.lower.size() + 1
               ? pfq_unit(spec, ctx)
               : pfq_direct(spec, ctx);
}

namespace {

PrecisionContext padded(const PrecisionContext& ctx) {
    return PrecisionContext(ctx.target_digits + 5, ctx.guard_digits, ctx.max_terms);
}

// upper/lower parameter triples {c + s*rho^j x : j = 0,1,2}
std::vector<Complex> rho_triple(const mpq_class& c, int s, const Real& x, mpfr_prec_t wp) {
    Complex rho = cube_root_unity(wp);
    Complex base(Real::of_rational(c, wp), Real::of_long(0, wp));
    std::vector<Complex> out;
    Complex rp = Complex::of_long(1, wp);
    for (int j = 0; j < 3; ++j) {
        Complex t = rp * Complex(x, Real::of_long(0, wp));
        out.push_back(s > 0 ? base + t : base - t);
        rp *= rho;
    }
    return out;
}

void require_unit_excess(const PFQSpec& spec) {
    Complex e = excess(spec, spec.z.prec());
    Real d = (e - Complex::of_long(1, e.prec())).abs();
    if (d.to_double() > d.error_bound() + e.error_bound() + 1e-20)
        throw DomainError("internal: hypergeometric parameter excess is not 1");
}

double dbl(const Real& x) { return x.to_double(); }

}  // namespace

DualValue gs_zeta_half_33n2(const Real& x, int N, const PrecisionContext& ctx) {
    double xd = dbl(x);
    if (!(xd > 0 && xd < 0.5)) throw DomainError("gs_zeta_half_33n2: need 0 < x < 1/2");
    const PrecisionContext pctx = padded(ctx);
    const mpfr_prec_t wp = pctx.work_prec();
    Real xr = x;  // promote to working precision via ops below

    PFQSpec spec;
    spec.upper = {Complex::of_long(2, wp)};
    for (auto& u : rho_triple(mpq_class(1), +1, xr, wp)) spec.upper.push_back(u);
    spec.lower = rho_triple(mpq_class(2), -1, xr, wp);
    spec.z = Complex::of_long(1, wp);
    require_unit_excess(spec);
    Complex f = pfq(spec, pctx);
    Real x2 = xr * xr;
    Real x3 = x2 * xr;
    Complex closed = (x2.ldexp(1) / (x3 - Real::of_long(1, wp))) * f;

    // series: -2x^2 sum_n zeta-half({3}^n, 2) (2x^3)^n
    double q = 1.2021 * 2 * xd * xd * xd;
    if (N <= 0) {
        N = 1;
        double tail = q;
        while (tail > std::pow(10.0, -ctx.target_digits - 3) && N < 64) {
            ++N;
            tail *= q;
        }
    }
    Real u = x3.ldexp(1);
    Real upow = Real::of_long(1, wp);
    Real s(wp);
    for (int n = 0; n <= N; ++n) {
        std::vector<int> parts(static_cast<std::size_t>(n), 3);
        parts.push_back(2);
        s += eval_zeta_half(Index(parts), pctx) * upow;
        upow = upow * u;
    }
    Real series = -(x2.ldexp(1)) * s;
    series.widen_error(2 * xd * xd * 1.645 * std::pow(q, N + 1) / (1 - q));
    return DualValue{closed, series};
}

DualValue gs_t_3n(const Real& x, const PrecisionContext& ctx) {
    double xd = dbl(x);
    if (!(std::fabs(xd) < 0.42)) throw DomainError("gs_t_3n: need |x| < 0.42");
    const PrecisionContext pctx = padded(ctx);
    const mpfr_prec_t wp = pctx.work_prec();

    Complex denom = Complex::of_long(1, wp);
    for (auto& g : rho_triple(mpq_class(1, 2), -1, x, wp)) denom *= gamma(g, pctx);
    Real pi = Real::pi(wp);
    Complex closed = Complex(pi * pi.sqrt(), Real::of_long(0, wp)) / denom;

    double q = 1.2021 * 8 * std::fabs(xd) * xd * xd;
    int N = 1;
    double tail = q;
    while (tail > std::pow(10.0, -ctx.target_digits - 3) && N < 80) {
        ++N;
        tail *= q;
    }
    auto ts = repeated_t_series(3, N, pctx);
    Real u = -(x * x * x).ldexp(3);
    Real upow = Real::of_long(1, wp);
    Real series(wp);
    for (int n = 0; n <= N; ++n) {
        series += ts[n] * upow;
        upow = upow * u;
    }
    series.widen_error(std::pow(q, N + 1) / (1 - q));
    return DualValue{closed, series};
}

DualValue gs_zstar_23n(const Real& x, int N, const PrecisionContext& ctx) {
    double xd = dbl(x);
    if (!(xd > 0 && xd < 0.9)) throw DomainError("gs_zstar_23n: need 0 < x < 0.9");
    const PrecisionContext pctx = padded(ctx);
    const mpfr_prec_t wp = pctx.work_prec();

    PFQSpec spec;
    spec.upper = rho_triple(mpq_class(1), -1, x, wp);
    spec.lower = {Complex::of_long(2, wp), Complex::of_long(2, wp)};
    spec.z = Complex::of_long(1, wp);
    require_unit_excess(spec);
    Complex f = pfq(spec, pctx);
    Complex gp = Complex::of_long(1, wp);
    for (auto& g : rho_triple(mpq_class(1), -1, x, wp)) gp *= gamma(g, pctx);
    Real x2 = x * x;
    Complex closed = gp * (x2 * f);

    double q = 1.2021 * xd * xd * xd;
    if (N <= 0) {
        N = 1;
        double tail = q;
        while (tail > std::pow(10.0, -ctx.target_digits - 3) && N < 80) {
            ++N;
            tail *= q;
        }
    }
    Real u = x2 * x;
    Real upow = Real::of_long(1, wp);
    Real s(wp);
    for (int n = 0; n <= N; ++n) {
        std::vector<int> parts{2};
        parts.insert(parts.end(), static_cast<std::size_t>(n), 3);
        s += eval_zeta_star(Index(parts), pctx) * upow;
        upow = upow * u;
    }
    Real series = x2 * s;
    series.widen_error(xd * xd * 1.645 * std::pow(q, N + 1) / (1 - q));
    return DualValue{closed, series};
}

DualValue gs_t_3n2(const Real& x, int N, const PrecisionContext& ctx) {
    double xd = dbl(x);
    if (!(xd > 0 && xd < 0.42)) throw DomainError("gs_t_3n2: need 0 < x < 0.42");
    const PrecisionContext pctx = padded(ctx);
    const mpfr_prec_t wp = pctx.work_prec();

    PFQSpec spec;
    spec.upper = {Complex::of_long(1, wp)};
    for (auto& u : rho_triple(mpq_class(1, 2), -1, x, wp)) spec.upper.push_back(u);
    Real half = Real::of_rational(mpq_class(1, 2), wp);
    Real threehalf = Real::of_rational(mpq_class(3, 2), wp);
    spec.lower = {Complex(half, Real::of_long(0, wp)),
                  Complex(threehalf, Real::of_long(0, wp)),
                  Complex(threehalf, Real::of_long(0, wp))};
    spec.z = Complex::of_long(1, wp);
    require_unit_excess(spec);
    Real x2 = x * x;
    Complex closed = (x2.ldexp(2)) * pfq(spec, pctx);

    double q = 1.2021 * 8 * xd * xd * xd;
    if (N <= 0) {
        N = 1;
        double tail = q;
        while (tail > std::pow(10.0, -ctx.target_digits - 3) && N < 80) {
            ++N;
            tail *= q;
        }
    }
    Real u = -(x2 * x).ldexp(3);
    Real upow = Real::of_long(1, wp);
    Real s(wp);
    for (int n = 0; n <= N; ++n) {
        std::vector<int> parts(static_cast<std::size_t>(n), 3);
        parts.push_back(2);
        s += eval_mtv(Index(parts), pctx) * upow;
        upow = upow * u;
    }
    Real series = x2.ldexp(2) * s;
    series.widen_error(4 * xd * xd * 1.645 * std::pow(q, N + 1) / (1 - q));
    return DualValue{closed, series};
}

VerificationReport check_4f3_identity(const Real& x, const PrecisionContext& ctx) {
    double xd = dbl(x);
    if (!(xd > 0 && xd < 0.5)) throw DomainError("check_4f3_identity: need 0 < x < 1/2");
    const PrecisionContext pctx = padded(ctx);
    const mpfr_prec_t wp = pctx.work_prec();

    PFQSpec s1;
    s1.upper = {Complex::of_long(2, wp)};
    for (auto& u : rho_triple(mpq_class(1), +1, x, wp)) s1.upper.push_back(u);
    s1.lower = rho_triple(mpq_class(2), -1, x, wp);
    s1.z = Complex::of_long(1, wp);
    require_unit_excess(s1);

    PFQSpec s2;
    s2.upper = {Complex::of_long(1, wp)};
    for (auto& u : rho_triple(mpq_class(1, 2), -1, x, wp)) s2.upper.push_back(u);
    Real half = Real::of_rational(mpq_class(1, 2), wp);
    Real th = Real::of_rational(mpq_class(3, 2), wp);
    s2.lower = {Complex(half, Real::of_long(0, wp)), Complex(th, Real::of_long(0, wp)),
                Complex(th, Real::of_long(0, wp))};
    s2.z = Complex::of_long(1, wp);
    require_unit_excess(s2);

    PFQSpec s3;
    s3.upper = rho_triple(mpq_class(1), -1, x, wp);
    s3.lower = {Complex::of_long(2, wp), Complex::of_long(2, wp)};
    s3.z = Complex::of_long(1, wp);
    require_unit_excess(s3);

    Real x3 = x * x * x;
    Complex lhs = pfq(s1, pctx) / Complex(x3 - Real::of_long(1, wp), Real::of_long(0, wp));

    Complex gnum = Complex::of_long(1, wp);
    for (auto& g : rho_triple(mpq_class(1), -1, x, wp)) gnum *= gamma(g, pctx);
    Complex gden = Complex::of_long(1, wp);
    for (auto& g : rho_triple(mpq_class(1, 2), -1, x, wp)) gden *= gamma(g, pctx);
    Real pi = Real::pi(wp);
    Complex pref = Complex((pi * pi.sqrt()).ldexp(-1), Real::of_long(0, wp));
    Complex rhs = pfq(s2, pctx).mul_long(-2) + pref * (gnum / gden) * pfq(s3, pctx);

    Real lr = lhs.re(), rr = rhs.re();
    lr.widen_error(lhs.im().mag() + lhs.im().error_bound());
    rr.widen_error(rhs.im().mag() + rhs.im().error_bound());
    return make_report("hypergeom-4f3", "x=" + x.str_value(8), lr, rr,
                       default_tolerance(ctx));
}

}  // namespace tzeta
