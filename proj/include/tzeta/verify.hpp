#ifndef TZETA_VERIFY_HPP
#define TZETA_VERIFY_HPP

#include <optional>
#include <vector>

#include "tzeta/index.hpp"
#include "tzeta/precision.hpp"
#include "tzeta/report.hpp"

namespace tzeta {

struct VerifyOptions {
    std::optional<double> tolerance;  // default: 10^-(digits-5)
    int jobs = 1;                     // parallel fan-out for the suite
};

/// Convolution identity at a maximal-height index j = (j_1,...,j_d):
/// with k = reverse(j),
///   -zh(bl(j)) = sum_{i=0}^d (-1)^i tt(k_1,...,k_i) zstar(j_1,...,j_{d-i}).
VerificationReport verify_convolution(const Index& idx, const PrecisionContext& ctx,
                                      const VerifyOptions& opts = {});

/// Descent: tt(k) = zeta(k) + sum_i (-1)^{i-1} zeta(k_{i+1..d}) zh(bl(k_i,...,k_1)).
VerificationReport verify_descent(const Index& idx, const PrecisionContext& ctx,
                                  const VerifyOptions& opts = {});

/// (d+1)x(d+1) unitriangular zeta*-matrix times the alternating zeta-matrix
/// equals the identity, and the column equality defining the descent holds.
VerificationReport verify_matrix(const Index& idx, const PrecisionContext& ctx,
                                 const VerifyOptions& opts = {});

/// sum_{i=0}^d (-1)^i zeta(k_1..k_i) zstar(k_d..k_{i+1}) = 0.
/// Errors out if any constituent diverges (interior 1's).
VerificationReport verify_antipode(const Index& idx, const PrecisionContext& ctx,
                                   const VerifyOptions& opts = {});

/// Two-one: zh(B(bl(k))) = eps_{k_1} zstar(k), eps = +1 iff k_1 = 1 else -1.
VerificationReport verify_two_one(const Index& idx, const PrecisionContext& ctx,
                                  const VerifyOptions& opts = {});

/// tt(1,2) = -(7/2) zeta(3) + pi^2 log 2.
VerificationReport verify_t12(const PrecisionContext& ctx, const VerifyOptions& opts = {});

/// Stuffle-product numeric check: zeta(a) zeta(b) = sum coeff * zeta(term).
VerificationReport verify_stuffle(const Index& a, const Index& b,
                                  const PrecisionContext& ctx,
                                  const VerifyOptions& opts = {});

/// Every identity over its enumerated inputs: convolution, descent and
/// matrix over maximal-height indices of weight <= weight_cap; antipode
/// (convergent subset) and two-one over admissible indices of weight <=
/// min(weight_cap, 9); t12; closed-form-vs-oracle and hypergeometric
/// checks.  Reports are sorted by (identity_id, inputs).
std::vector<VerificationReport> verify_suite(int weight_cap, const PrecisionContext& ctx,
                                             const VerifyOptions& opts = {});

}  // namespace tzeta

#endif
