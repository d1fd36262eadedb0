#ifndef TZETA_PRECISION_HPP
#define TZETA_PRECISION_HPP

#include <mpfr.h>

#include "tzeta/error.hpp"

namespace tzeta {

/// Requested accuracy for an evaluation.  Immutable; passed explicitly.
/// Working precision carries guard digits beyond the target so that
/// rounding noise stays below the certified bound.
struct PrecisionContext {
    int target_digits = 30;
    int guard_digits = 10;
    long max_terms = 4000000;

    PrecisionContext() = default;
    PrecisionContext(int target, int guard = 10, long cap = 4000000)
        : target_digits(target), guard_digits(guard), max_terms(cap) {
        validate();
    }

    void validate() const {
        if (target_digits < 10) throw DomainError("target_digits must be >= 10");
        if (target_digits > 200)
            throw DomainError("target_digits above 200 unsupported (error bounds are doubles)");
        if (guard_digits < 5) throw DomainError("guard_digits must be >= 5");
        if (max_terms < 1000) throw DomainError("max_terms must be >= 1000");
    }

    /// Working precision in bits: (target+guard) decimal digits plus headroom.
    mpfr_prec_t work_prec() const {
        return static_cast<mpfr_prec_t>((target_digits + guard_digits) * 3.3220 + 24);
    }

    /// 10^(-target_digits)
    double target_eps() const;

    PrecisionContext with_digits(int d) const {
        return PrecisionContext(d, guard_digits, max_terms);
    }
};

}  // namespace tzeta

#endif
