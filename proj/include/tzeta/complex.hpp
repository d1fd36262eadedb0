#ifndef TZETA_COMPLEX_HPP
#define TZETA_COMPLEX_HPP

#include <string>

#include "tzeta/real.hpp"

namespace tzeta {

/// Complex scalar over Real; principal branches throughout
/// (log/sqrt cut along the negative real axis, z^a = exp(a log z)).
class Complex {
public:
    Complex() = default;
    explicit Complex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
    Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit Complex(Real re) : re_(std::move(re)), im_(re_.prec()) {}

    static Complex of_long(long re, mpfr_prec_t prec);
    static Complex i(mpfr_prec_t prec);

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }
    mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

    double error_bound() const { return re_.error_bound() + im_.error_bound(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    Complex operator-() const { return Complex(-re_, -im_); }
    Complex conj() const { return Complex(re_, -im_); }
    Real abs() const;
    Real norm2() const { return re_ * re_ + im_ * im_; }

    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex& operator+=(const Complex& b) { *this = *this + b; return *this; }
    Complex& operator-=(const Complex& b) { *this = *this - b; return *this; }
    Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }
    Complex& operator/=(const Complex& b) { *this = *this / b; return *this; }

    Complex mul_long(long m) const { return Complex(re_.mul_long(m), im_.mul_long(m)); }
    Complex div_long(long d) const { return Complex(re_.div_long(d), im_.div_long(d)); }

    Complex exp() const;
    Complex log() const;   // principal
    Complex sqrt() const;  // principal
    Complex pow(const Complex& a) const;
    Complex sin() const;
    Complex cos() const;
    Complex cot() const;

    std::string str(int digits) const;

private:
    Real re_, im_;
};

Complex operator*(const Real& a, const Complex& b);

}  // namespace tzeta

#endif
