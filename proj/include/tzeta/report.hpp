#ifndef TZETA_REPORT_HPP
#define TZETA_REPORT_HPP

#include <string>
#include <vector>

#include "tzeta/precision.hpp"
#include "tzeta/real.hpp"

namespace tzeta {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

/// Outcome of one numeric identity check.  pass <=> residual <= tolerance,
/// and a conclusive verdict additionally needs
/// tolerance >= lhs.error_bound + rhs.error_bound; a residual inside the
/// combined bounds with a tighter tolerance is inconclusive, not a failure.
struct VerificationReport {
    std::string identity_id;
    std::string inputs;
    Real lhs, rhs;
    Real residual;  // |lhs - rhs|
    double tolerance = 0;
    Verdict verdict = Verdict::fail;
    bool pass = false;
    double wall_ms = 0;
};

VerificationReport make_report(std::string identity_id, std::string inputs,
                               const Real& lhs, const Real& rhs, double tolerance,
                               double wall_ms = 0);

/// 10^-(target_digits - 5): five digits of slack over the requested target.
double default_tolerance(const PrecisionContext& ctx);

/// One JSON object per report (JSON-lines serialization).  wall_time is
/// emitted only when with_timings is set so that default output is
/// bitwise-deterministic.
std::string report_json(const VerificationReport& r, bool with_timings = false);
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);
std::string report_text(const VerificationReport& r, int digits = 20);

/// Cosmetic recognition of value as (p/q) * zeta(w); empty if no rational
/// with denominator <= 10^9 fits within the declared slack.
std::string recognize_zeta_multiple(const Real& value, int weight,
                                    const PrecisionContext& ctx);

}  // namespace tzeta

#endif
