#ifndef TZETA_NESTED_SUM_HPP
#define TZETA_NESTED_SUM_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "tzeta/index.hpp"
#include "tzeta/precision.hpp"
#include "tzeta/real.hpp"

namespace tzeta {

// Production evaluators.  All rearrange the defining iterated sums into
// geometrically convergent series by composing the integration path at the
// midpoint, so the cost is O(weight * digits) regardless of the last
// exponent; results carry certified error bounds <= 10^-target_digits.

/// Alternating multiple zeta value zeta(k; eps); requires convergence
/// ((k_d, eps_d) != (1, +1)).  Memoized.
Real eval_amzv(const SignedIndex& sidx, const PrecisionContext& ctx);

/// Multiple zeta value; requires an admissible index.
Real eval_mzv(const Index& idx, const PrecisionContext& ctx);

enum class MtvRoute {
    direct,    // brute-force truncation of the odd-denominator sum
    via_amzv,  // 2^-d sum of signed AMZVs
    split,     // single-pass midpoint rearrangement of the t integrand
};

/// Multiple t-value.
Real eval_mtv(const Index& idx, const PrecisionContext& ctx,
              MtvRoute route = MtvRoute::split);

/// Interpolated value zeta^r; r an exact rational in [0,1].
Real eval_interpolated(const Index& idx, const mpq_class& r, const PrecisionContext& ctx);

/// Signed interpolation: merging adjacent parts multiplies signs and adds
/// exponents, with weight r per merge.
Real eval_interpolated(const SignedIndex& sidx, const mpq_class& r,
                       const PrecisionContext& ctx);

Real eval_zeta_star(const Index& idx, const PrecisionContext& ctx);
Real eval_zeta_half(const Index& idx, const PrecisionContext& ctx);

enum class RescaledFamily {
    zeta_half_tilde,  // 2^depth  * zeta^{1/2}
    t_tilde,          // 2^weight * t
};

enum class EvalFamily { AMZV, MZV, MtV, Interpolated };

/// One evaluation request; the rescale flag applies the family-specific
/// power of two (2^depth for interpolated r = 1/2, 2^weight for t).
struct EvalRequest {
    EvalFamily family = EvalFamily::MZV;
    SignedIndex index;
    mpq_class r = 0;  // Interpolated only; exact rational in [0,1]
    bool rescale = false;
    MtvRoute route = MtvRoute::split;  // MtV only
};

Real evaluate(const EvalRequest& req, const PrecisionContext& ctx);

Real eval_rescaled(RescaledFamily fam, const Index& idx, const PrecisionContext& ctx);
/// zeta-half-tilde with bars.
Real eval_rescaled(RescaledFamily fam, const SignedIndex& sidx, const PrecisionContext& ctx);

/// The 2^{d-1} contraction expansion defining zeta^r: pairs (weight, index)
/// with weight = r^{#merges}.  Exposed for tests and divergence reporting.
std::vector<std::pair<mpq_class, SignedIndex>> interpolation_expansion(
    const SignedIndex& sidx, const mpq_class& r);

// Brute-force oracles: plain truncation of the defining sums at m_d <= M
// with an integral tail bound.  Slow and deliberately simple; bounds are
// honest but large unless the last exponent is big.
namespace bruteforce {

Real mzv(const Index& idx, long M);
Real amzv(const SignedIndex& sidx, long M);
Real mtv(const Index& idx, long M);
/// Direct <=-ordered interpolated sum (signs optional).
Real interpolated(const SignedIndex& sidx, const mpq_class& r, long M);

}  // namespace bruteforce

}  // namespace tzeta

#endif
