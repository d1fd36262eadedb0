#include "tzeta/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "tzeta/error.hpp"

namespace tzeta {

mpq_class rational_pow(const mpq_class& q, long e) {
    if (e == 0) return mpq_class(1);
    mpq_class base = e > 0 ? q : mpq_class(1) / q;
    long n = std::labs(e);
    mpq_class acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    try {
        mpq_class q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational '" + text + "'");
    }
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

bool rationalize_exact(const mpq_class& x, long denominator_cap, const mpq_class& tol,
                       mpq_class* out) {
    mpq_class v = x;
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 256; ++it) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > denominator_cap) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        mpq_class cand(p1, q1);
        cand.canonicalize();
        if (abs(cand - x) <= tol) {
            *out = cand;
            return true;
        }
        mpq_class frac = v - mpq_class(a);
        if (frac == 0) break;
        v = mpq_class(1) / frac;
    }
    return false;
}

bool rationalize(double x, long denominator_cap, double tol, mpq_class* out) {
    // continued-fraction convergents
    double v = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) break;
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > denominator_cap) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double r = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::fabs(r - x) <= tol) {
            *out = mpq_class(p1, q1);
            out->canonicalize();
            return true;
        }
        double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    return false;
}

}  // namespace tzeta
