#ifndef TZETA_HYPERGEOM_HPP
#define TZETA_HYPERGEOM_HPP

#include <vector>

#include "tzeta/complex.hpp"
#include "tzeta/precision.hpp"
#include "tzeta/report.hpp"

namespace tzeta {

/// Generalized hypergeometric sum with complex parameters.
/// At z = 1 with #upper = #lower + 1, convergence requires
/// Re(sum lower - sum upper) > 0.
struct PFQSpec {
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    Complex z;
};

/// Pochhammer-ratio summation.  |z| < 1: direct with a geometric tail
/// bound.  z = 1: partial sum plus a recurrence-solved asymptotic tail
/// (self-validated at a second split point).
Complex pfq(const PFQSpec& spec, const PrecisionContext& ctx);

/// Closed form and defining-series value of one generating-series lemma;
/// the two must agree within combined bounds.
struct DualValue {
    Complex closed;
    Real series;
    Real residual() const;
};

/// sum_n -2^{1/3} zeta-half({3}^n,2) (2^{1/3} x)^{3n+2}  vs
/// (2x^2/(x^3-1)) 4F3(2,1+x,1+rx,1+r^2x; 2-x,2-rx,2-r^2x; 1), r = exp(2 pi i/3).
DualValue gs_zeta_half_33n2(const Real& x, int N, const PrecisionContext& ctx);
/// sum_n t({3}^n) (-2x)^{3n}  vs  pi^{3/2} / prod_j Gamma(1/2 - r^j x).
DualValue gs_t_3n(const Real& x, const PrecisionContext& ctx);
/// sum_n zeta*(2,{3}^n) x^{3n+2}  vs  prod Gamma(1-r^j x) * x^2 * 3F2(...;2,2;1).
DualValue gs_zstar_23n(const Real& x, int N, const PrecisionContext& ctx);
/// sum_n t({3}^n,2) (-2x)^{3n+2}  vs  4x^2 4F3(1,1/2-x,...;1/2,3/2,3/2;1).
DualValue gs_t_3n2(const Real& x, int N, const PrecisionContext& ctx);

/// The 4F3 identity tying the four series together, checked at real
/// 0 < x < 1/2.
VerificationReport check_4f3_identity(const Real& x, const PrecisionContext& ctx);

/// Primitive cube root exp(2 pi i / 3) at working precision.
Complex cube_root_unity(mpfr_prec_t prec);

}  // namespace tzeta

#endif
