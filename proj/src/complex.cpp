#include "tzeta/complex.hpp"

#include "tzeta/error.hpp"

namespace tzeta {

Complex Complex::of_long(long re, mpfr_prec_t prec) {
    return Complex(Real::of_long(re, prec), Real::of_long(0, prec));
}

Complex Complex::i(mpfr_prec_t prec) {
    return Complex(Real::of_long(0, prec), Real::of_long(1, prec));
}

Real Complex::abs() const {
    return norm2().sqrt();
}

Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
}

Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
}

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n2 = b.norm2();
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / n2,
                   (a.im_ * b.re_ - a.re_ * b.im_) / n2);
}

Complex operator*(const Real& a, const Complex& b) {
    return Complex(a * b.re(), a * b.im());
}

Complex Complex::exp() const {
    Real m = re_.exp();
    return Complex(m * im_.cos(), m * im_.sin());
}

Complex Complex::log() const {
    if (is_zero()) throw DomainError("log 0");
    Real half = Real::of_double(0.5, prec());
    return Complex(half * norm2().log(), im_.atan2(re_));
}

Complex Complex::sqrt() const {
    if (is_zero()) return Complex(prec());
    Real half = Real::of_double(0.5, prec());
    return (half * log()).exp();
}

Complex Complex::pow(const Complex& a) const {
    return (a * log()).exp();
}

Complex Complex::sin() const {
    // (e^{iz} - e^{-iz}) / 2i
    Complex iz(-im_, re_);
    Complex e1 = iz.exp();
    Complex e2 = (-iz).exp();
    Complex d = e1 - e2;
    return Complex(d.im().ldexp(-1), (-d.re()).ldexp(-1));
}

Complex Complex::cos() const {
    Complex iz(-im_, re_);
    return (iz.exp() + (-iz).exp()).mul_long(1).div_long(2);
}

Complex Complex::cot() const {
    Complex s = sin();
    if (s.abs().mag() <= s.error_bound()) throw DomainError("cot at a pole");
    return cos() / s;
}

std::string Complex::str(int digits) const {
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") +
           im_.abs().str(digits) + "*i";
}

}  // namespace tzeta
