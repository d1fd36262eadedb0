#include "tzeta/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tzeta/error.hpp"

namespace tzeta {

namespace {

// Error magnitudes saturate rather than overflow; tiny floor keeps
// later divisions by (|x| - err) meaningful.
constexpr double kErrInf = 1e300;

double sat(double e) {
    if (!(e >= 0)) return kErrInf;  // NaN -> give up conservatively
    return std::min(e, kErrInf);
}

}  // namespace

Real Real::of_long(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    r.err_ = 0.0;
    return r;
}

Real Real::of_double(double v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    r.err_ = 0.0;  // doubles embed exactly
    return r;
}

Real Real::of_rational(const mpq_class& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    r.err_ = r.ulp();
    return r;
}

Real Real::of_string(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("bad numeric literal '" + s + "'");
    r.err_ = r.ulp();
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    r.err_ = r.ulp();
    return r;
}

Real Real::log2_const(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    r.err_ = r.ulp();
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    r.err_ = 0.0;
    return r;
}

double Real::mag() const {
    if (mpfr_zero_p(v_)) return 0.0;
    double d = std::fabs(mpfr_get_d(v_, MPFR_RNDA));
    if (!std::isfinite(d)) return kErrInf;
    return std::max(d, 1e-290);
}

double Real::ulp() const {
    if (mpfr_zero_p(v_)) return 0.0;
    long e = mpfr_get_exp(v_);
    long p = static_cast<long>(mpfr_get_prec(v_));
    double u = std::ldexp(1.0, static_cast<int>(std::clamp(e - p + 1, -900L, 900L)));
    return sat(u);
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    r.err_ = err_;
    return r;
}

Real Real::abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    r.err_ = err_;
    return r;
}

Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.err_ = sat(a.err_ + b.err_ + r.ulp());
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.err_ = sat(a.err_ + b.err_ + r.ulp());
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.err_ = sat(a.mag() * b.err_ + b.mag() * a.err_ + a.err_ * b.err_ + r.ulp());
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    double bm = b.mag();
    if (mpfr_zero_p(b.v_) || bm <= 2 * b.err_) {
        if (mpfr_zero_p(b.v_)) throw DomainError("division by zero");
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        r.err_ = kErrInf;
        return r;
    }
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.err_ = sat((a.err_ + r.mag() * b.err_) / (bm - b.err_) + r.ulp());
    return r;
}

Real Real::mul_long(long m) const {
    Real r(prec());
    mpfr_mul_si(r.v_, v_, m, MPFR_RNDN);
    r.err_ = sat(err_ * std::fabs(static_cast<double>(m)) + r.ulp());
    return r;
}

Real Real::div_long(long d) const {
    if (d == 0) throw DomainError("division by zero");
    Real r(prec());
    mpfr_div_si(r.v_, v_, d, MPFR_RNDN);
    r.err_ = sat(err_ / std::fabs(static_cast<double>(d)) + r.ulp());
    return r;
}

Real Real::ldexp(long e) const {
    Real r(prec());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    r.err_ = sat(err_ * std::ldexp(1.0, static_cast<int>(std::clamp(e, -900L, 900L))));
    return r;
}

Real Real::sqrt() const {
    if (sign() < 0) throw DomainError("sqrt of negative real");
    Real r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    double m = mag();
    double d = (m > err_ && m > 0) ? err_ / (2.0 * std::sqrt(m - err_)) : std::sqrt(err_);
    r.err_ = sat(d + r.ulp());
    return r;
}

Real Real::exp() const {
    Real r(prec());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    // |exp(x+-d) - exp(x)| <= exp(x)(e^d - 1)
    double d = err_ <= 0.5 ? r.mag() * err_ * 1.65 : kErrInf;
    r.err_ = sat(d + 2 * r.ulp());
    return r;
}

Real Real::log() const {
    double m = mag();
    if (sign() <= 0 || m <= err_) throw DomainError("log outside domain");
    Real r(prec());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    r.err_ = sat(err_ / (m - err_) + 2 * r.ulp());
    return r;
}

Real Real::pow_long(long e) const {
    Real r(prec());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    double rel = (mag() > err_) ? err_ / (mag() - err_) : kErrInf;
    double fac = std::fabs(static_cast<double>(e)) * rel;
    r.err_ = sat((fac < 0.5 ? r.mag() * fac * 2.0 : kErrInf) + 2 * r.ulp());
    return r;
}

Real Real::sin() const {
    Real r(prec());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    r.err_ = sat(err_ + 2 * r.ulp());
    return r;
}

Real Real::cos() const {
    Real r(prec());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    r.err_ = sat(err_ + 2 * r.ulp());
    return r;
}

Real Real::atan2(const Real& x) const {
    Real r(std::max(prec(), x.prec()));
    mpfr_atan2(r.v_, v_, x.v_, MPFR_RNDN);
    // d(atan2)/dy, /dx are bounded by 1/r with r^2 = x^2+y^2
    double n2 = mag() * mag() + x.mag() * x.mag();
    double d = n2 > 0 ? (err_ + x.err_) / std::sqrt(n2) : kErrInf;
    r.err_ = sat(d + 2 * r.ulp());
    return r;
}

std::string Real::str_value(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

std::string Real::str(int digits) const {
    char ebuf[32];
    std::snprintf(ebuf, sizeof ebuf, "%.1e", err_);
    return str_value(digits) + " +- " + ebuf;
}

bool agree_within_bounds(const Real& a, const Real& b, double slack) {
    Real d = (a - b).abs();
    return d.to_double() <= a.error_bound() + b.error_bound() + slack;
}

}  // namespace tzeta
