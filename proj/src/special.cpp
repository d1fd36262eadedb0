#include "tzeta/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "tzeta/error.hpp"

namespace tzeta {

namespace {

std::mutex g_bern_mutex;
std::vector<mpq_class> g_bern;  // B_0, B_1, ...

void extend_bernoulli(int n) {
    if (static_cast<int>(g_bern.size()) > n) return;
    if (g_bern.empty()) g_bern.push_back(mpq_class(1));
    for (int m = static_cast<int>(g_bern.size()); m <= n; ++m) {
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        mpq_class acc(0);
        mpz_class binom;
        for (int k = 0; k < m; ++k) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(k));
            acc += mpq_class(binom) * g_bern[static_cast<std::size_t>(k)];
        }
        g_bern.push_back(-acc / (m + 1));
    }
}

}  // namespace

mpq_class bernoulli(int n) {
    if (n < 0) throw DomainError("bernoulli: n >= 0 required");
    std::lock_guard<std::mutex> lock(g_bern_mutex);
    extend_bernoulli(n);
    return g_bern[static_cast<std::size_t>(n)];
}

namespace {

std::mutex g_zeta_mutex;
std::map<std::pair<int, long>, Real> g_zeta_cache;

Real zeta_even(int n, mpfr_prec_t wp) {
    // zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
    const int m = n / 2;
    mpq_class c = bernoulli(n);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    c /= mpq_class(fact) * 2;
    if (m % 2 == 0) c = -c;
    Real twopi = Real::pi(wp).ldexp(1);
    return Real::of_rational(c, wp) * twopi.pow_long(n);
}

// Alternating-series acceleration (Chebyshev-polynomial weights); for the
// totally monotone sequence 1/(k+1)^s the error falls like (3+sqrt 8)^-N.
Real eta_accelerated(int s, mpfr_prec_t wp) {
    const double q = 1.7627471740390861;  // ln(3+sqrt 8)
    const int N = static_cast<int>(static_cast<double>(wp) * 0.6931471805599453 / q) + 12;
    Real d = (Real::of_long(3, wp) + Real::of_long(8, wp).sqrt()).pow_long(N);
    d = (d + Real::of_long(1, wp) / d).ldexp(-1);
    Real b = Real::of_long(-1, wp);
    Real c = -d;
    Real acc = Real::of_long(0, wp);
    Real one = Real::of_long(1, wp);
    for (long k = 0; k < N; ++k) {
        c = b - c;
        Real term(wp);
        mpfr_ui_pow_ui(term.raw(), static_cast<unsigned long>(k + 1),
                       static_cast<unsigned long>(s), MPFR_RNDN);
        term.set_error_bound(term.ulp());
        acc += c / term;
        b = b.mul_long(2 * (k + N)).mul_long(k - N).div_long(2 * k + 1).div_long(k + 1);
    }
    Real r = acc / d;
    r.widen_error(4.0 * std::exp(-q * N) + 8 * r.ulp());
    return r;
}

}  // namespace

Real zeta_int_via_eta(int n, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("zeta_int: n >= 2 required");
    const mpfr_prec_t wp = ctx.work_prec() + 32;
    Real eta = eta_accelerated(n, wp);
    Real denom = Real::of_long(1, wp) - Real::pow2(1 - n, wp);
    return eta / denom;
}

Real zeta_int(int n, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("zeta_int: n >= 2 required");
    const mpfr_prec_t wp = ctx.work_prec() + 32;
    {
        std::lock_guard<std::mutex> lock(g_zeta_mutex);
        auto it = g_zeta_cache.find({n, wp});
        if (it != g_zeta_cache.end()) return it->second;
    }
    Real v = (n % 2 == 0) ? zeta_even(n, wp) : zeta_int_via_eta(n, ctx);
    std::lock_guard<std::mutex> lock(g_zeta_mutex);
    g_zeta_cache.emplace(std::make_pair(n, static_cast<long>(wp)), v);
    return v;
}

Real zeta_bar(int n, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("zeta_bar: n >= 2 required");
    Real z = zeta_int(n, ctx);
    Real f = Real::of_long(1, z.prec()) - Real::pow2(1 - n, z.prec());
    return -(f * z);
}

namespace {

// Stirling series for ln Gamma(w), valid after shifting w into
// Re w >= max(R, |Im w|); remainder bounded by the first omitted term
// times sec(arg(w)/2)^{2N+2} <= sec(pi/8)^{2N+2}.
Complex log_gamma_stirling(const Complex& w, mpfr_prec_t wp) {
    Complex half(Real::of_double(0.5, wp), Real::of_long(0, wp));
    Complex acc = (w - half) * w.log() - w;
    Real ln2pi = (Real::pi(wp).ldexp(1)).log();
    acc += Complex(ln2pi.ldexp(-1), Real::of_long(0, wp));

    Complex w2 = w * w;
    Complex wpow = w;  // w^{2j-1}
    const double wmag = w.abs().to_double();
    double prev = 1e308;
    double rem = 1e308;
    for (int j = 1; j < 400; ++j) {
        if (j > 1) wpow *= w2;
        mpq_class c = bernoulli(2 * j) / mpq_class((2 * j) * (2L * j - 1));
        Complex term = Complex(Real::of_rational(c, wp), Real::of_long(0, wp)) / wpow;
        double tmag = term.abs().to_double();
        if (tmag >= prev) {  // asymptotic regime exhausted
            rem = prev * std::pow(1.0824, 2.0 * j + 2);
            break;
        }
        acc += term;
        prev = tmag;
        if (tmag < std::ldexp(1.0, -static_cast<int>(wp) - 8) * (std::fabs(acc.re().to_double()) + 1)) {
            // bound the tail by the next term
            double nb = std::abs(bernoulli(2 * j + 2).get_d()) /
                        ((2 * j + 2) * (2 * j + 1) * std::pow(wmag, 2 * j + 1));
            rem = nb * std::pow(1.0824, 2.0 * j + 2);
            break;
        }
    }
    acc.re().widen_error(rem);
    acc.im().widen_error(rem);
    return acc;
}

bool near_nonpositive_integer(const Complex& z) {
    if (std::fabs(z.im().to_double()) > 1e-12 + z.im().error_bound()) return false;
    double x = z.re().to_double();
    return x < 0.5 && std::fabs(x - std::round(x)) <= 1e-12 + z.re().error_bound();
}

}  // namespace

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_prec() + 32;
    if (near_nonpositive_integer(z))
        throw DomainError("gamma: pole at nonpositive integer");

    if (z.re().to_double() < 0.5) {
        // Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        Complex one = Complex::of_long(1, wp);
        Complex pi_c(Real::pi(wp), Real::of_long(0, wp));
        Complex s = (pi_c * z).sin();
        return pi_c / (s * gamma(one - z, ctx));
    }

    const double R = 0.12 * static_cast<double>(wp) + 8.0;
    double re = z.re().to_double();
    double im = std::fabs(z.im().to_double());
    long m = 0;
    while (re + static_cast<double>(m) < std::max(R, im)) ++m;

    Complex w = z + Complex::of_long(m, wp);
    Complex lg = log_gamma_stirling(w, wp);
    Complex g = lg.exp();
    for (long k = 0; k < m; ++k) g = g / (z + Complex::of_long(k, wp));
    return g;
}

Real gamma(const Real& x, const PrecisionContext& ctx) {
    Complex g = gamma(Complex(x, Real::of_long(0, x.prec())), ctx);
    Real r = g.re();
    r.widen_error(g.im().mag() + g.im().error_bound());
    return r;
}

Complex elementary(Elementary fn, const Complex& z, const PrecisionContext& ctx,
                   const Complex* exponent) {
    (void)ctx;
    switch (fn) {
        case Elementary::exp: return z.exp();
        case Elementary::log: return z.log();
        case Elementary::sqrt: return z.sqrt();
        case Elementary::sin: return z.sin();
        case Elementary::cot: return z.cot();
        case Elementary::power:
            if (!exponent) throw DomainError("power needs an exponent");
            return z.pow(*exponent);
    }
    throw DomainError("unknown elementary function");
}

}  // namespace tzeta
