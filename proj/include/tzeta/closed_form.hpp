#ifndef TZETA_CLOSED_FORM_HPP
#define TZETA_CLOSED_FORM_HPP

#include <vector>

#include "tzeta/precision.hpp"
#include "tzeta/series.hpp"

namespace tzeta {

/// Generating series for zeta with a repeated argument, stored in the
/// grouped variable u = lambda^s: coefficient n is zeta({s}^n), realized
/// as exp(sum_k (-1)^{k-1} zeta(sk) u^k / k).
struct ZSeries {
    int s;
    int order;
    PowerSeries<Real> series;
};

ZSeries z_series(int s, int N, const PrecisionContext& ctx);

/// Coefficient n is zeta*({s}^n): 1 / Z(-u).
PowerSeries<Real> repeated_star_series(int s, int N, const PrecisionContext& ctx);
/// Coefficient n is t({s}^n): Z(u) / Z(u / 2^s).
PowerSeries<Real> repeated_t_series(int s, int N, const PrecisionContext& ctx);

/// Complete symmetric function h_n written in power sums:
/// Q_n = sum over 1j_1+...+nj_n = n of prod x_i^{j_i} / (i^{j_i} j_i!).
template <typename T>
T q_poly(int n, const std::vector<T>& xs) {
    if (n < 0) throw DomainError("q_poly: n >= 0 required");
    if (static_cast<int>(xs.size()) < n) throw DomainError("q_poly: need n power sums");
    mpfr_prec_t prec = n > 0 ? xs[0].prec() : mpfr_prec_t(64);
    PowerSeries<T> g(n, prec);
    for (int j = 1; j <= n; ++j)
        g[j] = xs[static_cast<std::size_t>(j - 1)].div_long(j);
    return ps_exp(g)[n];
}

// zeta-half of (1, {{1}^{a-3}, 3}^{b-1}, {1}^{a-3}, 2), three routes.

/// 2^{2b-1} [u^b] ( -Z_a(-u) / Z_a(-u/2^a)^2 ), u the grouped variable.
Real prop21_coeff(int a, int b, const PrecisionContext& ctx);
/// Even a = 2m: coefficient of the cotangent product expansion.
Real prop21_cotangent(int m, int b, const PrecisionContext& ctx);
/// -2^{2b-1} Q_b(zeta(a bar), zeta(2a bar), ..., zeta(ab bar)).
Real prop21_qform(int a, int b, const PrecisionContext& ctx);

/// Parity reduction of zeta(a,b), a >= 1, b >= 2, a+b odd.
/// The formal zeta(1) in the b-even term is stuffle-regularized to 0.
Real parity_double_zeta(int a, int b, const PrecisionContext& ctx);
/// Parity reduction of t(a,b), same range; at a = 1 the formal
/// (1-2^{-1}) zeta(1) factor is the regularized t(1) = log 2.
Real parity_double_t(int a, int b, const PrecisionContext& ctx);

/// Uniform double-zeta expression for t(2,k), k >= 2.
Real t_two_k(int k, const PrecisionContext& ctx);

/// zeta-half({1}^n, 4) via double zetas (n >= 0).
Real prop22_z114(int n, const PrecisionContext& ctx);
/// Odd case n = 2m+1 via single zetas (m >= 0).
Real prop22_z114_odd(int m, const PrecisionContext& ctx);
/// zeta-half(3, {1}^{n-1}, 2) via double zetas (n >= 1).
Real prop22_z3112(int n, const PrecisionContext& ctx);
/// Even-count case n = 2m+1 via single zetas (m >= 0).
Real prop22_z3112_even(int m, const PrecisionContext& ctx);
/// zeta-half({1}^n,4) + zeta-half(3,{1}^{n-1},2), closed form (n >= 1).
Real prop22_sum(int n, const PrecisionContext& ctx);

/// zeta-half({1}^i, 3, {1}^j, 2) for i+j even.
Real prop23(int i, int j, const PrecisionContext& ctx);

}  // namespace tzeta

#endif
