#ifndef TZETA_RATIONAL_HPP
#define TZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tzeta {

/// Exact rationals are GMP's mpq_class; helpers for the few operations the
/// library needs beyond its operators.

mpq_class rational_pow(const mpq_class& q, long e);

/// Parse "p/q" or "p" (CLI flag values such as --r and --x).
mpq_class parse_rational(const std::string& text);

std::string rational_str(const mpq_class& q);

/// Best rational approximation with denominator <= cap such that
/// |p/q - x| <= tol; returns false if none.  Used only for cosmetic
/// "rational multiple of zeta(w)" recognition in reports.
bool rationalize(double x, long denominator_cap, double tol, mpq_class* out);

/// Exact-arithmetic variant (continued fractions over mpq); x is taken
/// exactly, so tolerances far below double resolution are meaningful.
bool rationalize_exact(const mpq_class& x, long denominator_cap, const mpq_class& tol,
                       mpq_class* out);

}  // namespace tzeta

#endif
