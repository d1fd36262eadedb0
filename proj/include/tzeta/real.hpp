#ifndef TZETA_REAL_HPP
#define TZETA_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

#include "tzeta/precision.hpp"

namespace tzeta {

/// Arbitrary-precision real with an attached absolute error bound.
/// The bound is a single conservatively propagated magnitude, not an
/// interval: result bound >= |stored value - true value| whenever the
/// operands' bounds hold.
class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) : err_(o.err_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : err_(o.err_) {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            err_ = o.err_;
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        err_ = o.err_;
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of_long(long v, mpfr_prec_t prec);
    static Real of_double(double v, mpfr_prec_t prec);
    static Real of_rational(const mpq_class& q, mpfr_prec_t prec);
    static Real of_string(const std::string& s, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);
    static Real log2_const(mpfr_prec_t prec);
    /// 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

    double error_bound() const { return err_; }
    void set_error_bound(double e) { err_ = e; }
    void widen_error(double e) { err_ += e; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    /// |value| as a double, saturating instead of over/underflowing.
    double mag() const;
    /// One ulp at this value's precision (0 for exact zero).
    double ulp() const;

    // value comparisons ignore error bounds
    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_long(long o) const { return mpfr_cmp_si(v_, o); }

    Real operator-() const;
    Real abs() const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real& operator+=(const Real& b) { *this = *this + b; return *this; }
    Real& operator-=(const Real& b) { *this = *this - b; return *this; }
    Real& operator*=(const Real& b) { *this = *this * b; return *this; }
    Real& operator/=(const Real& b) { *this = *this / b; return *this; }

    Real mul_long(long m) const;
    Real div_long(long d) const;
    /// Multiply by 2^e (exact).
    Real ldexp(long e) const;

    Real sqrt() const;
    Real exp() const;
    Real log() const;
    Real pow_long(long e) const;
    Real sin() const;
    Real cos() const;
    Real atan2(const Real& x) const;  // atan2(*this, x)

    /// "1.2337005501361697(1) +- 1.0e-25"-style decimal rendering.
    std::string str(int digits) const;
    /// Plain decimal, no error suffix.
    std::string str_value(int digits) const;

private:
    mpfr_t v_;
    double err_ = 0.0;
};

/// max(|a - b| - a.err - b.err, 0) <= true |a-b|; helper for tests.
bool agree_within_bounds(const Real& a, const Real& b, double slack = 0.0);

}  // namespace tzeta

#endif
