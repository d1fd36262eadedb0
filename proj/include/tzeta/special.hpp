#ifndef TZETA_SPECIAL_HPP
#define TZETA_SPECIAL_HPP

#include <gmpxx.h>

#include "tzeta/complex.hpp"
#include "tzeta/precision.hpp"
#include "tzeta/real.hpp"

namespace tzeta {

/// Exact Bernoulli number B_n (B_1 = -1/2); cached.
mpq_class bernoulli(int n);

/// zeta(n), n >= 2, certified.  Even n through the Bernoulli closed form;
/// odd n through the accelerated alternating (eta) series.  Memoized per
/// (n, working precision).
Real zeta_int(int n, const PrecisionContext& ctx);

/// zeta(n bar) = -(1 - 2^{1-n}) zeta(n), n >= 2.
Real zeta_bar(int n, const PrecisionContext& ctx);

/// Odd-n series path exposed for the dual-route property test.
Real zeta_int_via_eta(int n, const PrecisionContext& ctx);

/// Gamma at a complex point (poles at nonpositive integers rejected).
/// Stirling with argument shifting; reflection for Re z < 1/2.
Complex gamma(const Complex& z, const PrecisionContext& ctx);
Real gamma(const Real& x, const PrecisionContext& ctx);

enum class Elementary { exp, log, sqrt, sin, cot, power };

/// Dispatcher over the elementary functions (CLI/report convenience);
/// `power` computes z^w with the principal branch.
Complex elementary(Elementary fn, const Complex& z, const PrecisionContext& ctx,
                   const Complex* exponent = nullptr);

}  // namespace tzeta

#endif
