#ifndef TZETA_SERIES_HPP
#define TZETA_SERIES_HPP

#include <vector>

#include "tzeta/complex.hpp"
#include "tzeta/error.hpp"
#include "tzeta/real.hpp"

namespace tzeta {

template <typename T>
T series_scalar_long(long v, mpfr_prec_t prec);

template <>
inline Real series_scalar_long<Real>(long v, mpfr_prec_t prec) {
    return Real::of_long(v, prec);
}
template <>
inline Complex series_scalar_long<Complex>(long v, mpfr_prec_t prec) {
    return Complex::of_long(v, prec);
}

/// Truncated power series c_0 + c_1 x + ... + c_N x^N.  Operations never
/// read beyond the stored order and report the order of the result.
template <typename T>
class PowerSeries {
public:
    PowerSeries(int order, mpfr_prec_t prec)
        : prec_(prec),
          c_(static_cast<std::size_t>(order) + 1, series_scalar_long<T>(0, prec)) {
        if (order < 0) throw DomainError("series order must be >= 0");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    mpfr_prec_t prec() const { return prec_; }
    const T& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    T& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }

private:
    mpfr_prec_t prec_;
    std::vector<T> c_;
};

template <typename T>
PowerSeries<T> ps_add(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries<T> r(n, a.prec());
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

template <typename T>
PowerSeries<T> ps_mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    PowerSeries<T> r(n, a.prec());
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// exp of a series with vanishing constant term.
template <typename T>
PowerSeries<T> ps_exp(const PowerSeries<T>& g) {
    if (!g[0].is_zero()) throw DomainError("ps_exp needs c_0 = 0");
    int n = g.order();
    PowerSeries<T> f(n, g.prec());
    f[0] = series_scalar_long<T>(1, g.prec());
    for (int m = 1; m <= n; ++m) {
        T acc = series_scalar_long<T>(0, g.prec());
        for (int k = 1; k <= m; ++k) acc += g[k].mul_long(k) * f[m - k];
        f[m] = acc.div_long(m);
    }
    return f;
}

/// 1 / f for f with invertible constant term.
template <typename T>
PowerSeries<T> ps_recip(const PowerSeries<T>& f) {
    if (f[0].is_zero()) throw DomainError("ps_recip needs c_0 != 0");
    int n = f.order();
    PowerSeries<T> g(n, f.prec());
    T inv0 = series_scalar_long<T>(1, f.prec()) / f[0];
    g[0] = inv0;
    for (int m = 1; m <= n; ++m) {
        T acc = series_scalar_long<T>(0, f.prec());
        for (int k = 1; k <= m; ++k) acc += f[k] * g[m - k];
        g[m] = -(acc * inv0);
    }
    return g;
}

/// Substitute x -> c x: coefficient n scales by c^n.
template <typename T>
PowerSeries<T> ps_scale_arg(const PowerSeries<T>& f, const T& c) {
    PowerSeries<T> r(f.order(), f.prec());
    T p = series_scalar_long<T>(1, f.prec());
    for (int i = 0; i <= f.order(); ++i) {
        r[i] = f[i] * p;
        if (i < f.order()) p *= c;
    }
    return r;
}

template <typename T>
const T& ps_coeff(const PowerSeries<T>& f, int n) {
    if (n < 0 || n > f.order()) throw DomainError("ps_coeff beyond truncation order");
    return f[n];
}

}  // namespace tzeta

#endif
