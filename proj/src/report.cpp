#include "tzeta/report.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>

#include "tzeta/rational.hpp"
#include "tzeta/special.hpp"

namespace tzeta {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

VerificationReport make_report(std::string identity_id, std::string inputs,
                               const Real& lhs, const Real& rhs, double tolerance,
                               double wall_ms) {
    VerificationReport r;
    r.identity_id = std::move(identity_id);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = (lhs - rhs).abs();
    r.tolerance = tolerance;
    const double combined = lhs.error_bound() + rhs.error_bound();
    const double res = r.residual.to_double();
    if (tolerance >= combined)
        // a pass must also be explained by the constituent bounds (x10 slack):
        // a residual below the tolerance but far above the bounds is a
        // genuine near-miss, not a verified identity
        r.verdict = (res <= tolerance && res <= 10 * combined) ? Verdict::pass
                                                               : Verdict::fail;
    else
        r.verdict = res <= combined ? Verdict::inconclusive : Verdict::fail;
    r.pass = r.verdict == Verdict::pass;
    r.wall_ms = wall_ms;
    return r;
}

double default_tolerance(const PrecisionContext& ctx) {
    return std::pow(10.0, -(ctx.target_digits - 5));
}

namespace {

int report_digits(const Real& v) {
    double eb = std::max(v.error_bound(), 1e-60);
    int digits = static_cast<int>(-std::log10(eb)) + 1;
    return std::max(8, std::min(digits, 50));
}

std::string scalar_str(const Real& v) { return v.str(report_digits(v)); }

}  // namespace

std::string report_json(const VerificationReport& r, bool with_timings) {
    nlohmann::json j;
    j["identity_id"] = r.identity_id;
    j["inputs"] = r.inputs;
    j["lhs"] = scalar_str(r.lhs);
    j["rhs"] = scalar_str(r.rhs);
    j["residual"] = r.residual.to_double();
    j["tolerance"] = r.tolerance;
    j["verdict"] = to_string(r.verdict);
    j["pass"] = r.pass;
    if (with_timings) j["wall_time_ms"] = r.wall_ms;
    return j.dump();
}

std::string report_csv_header() { return "identity_id,inputs,residual,pass"; }

std::string report_csv_row(const VerificationReport& r) {
    std::ostringstream os;
    os << r.identity_id << ",\"" << r.inputs << "\"," << r.residual.to_double() << ","
       << (r.pass ? "true" : "false");
    return os.str();
}

std::string report_text(const VerificationReport& r, int digits) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : to_string(r.verdict) == "fail" ? "FAIL" : "INCONCLUSIVE")
       << "  " << r.identity_id << "(" << r.inputs << ")\n"
       << "      lhs = " << r.lhs.str(digits) << "\n"
       << "      rhs = " << r.rhs.str(digits) << "\n"
       << "      residual = " << r.residual.to_double() << "  tolerance = " << r.tolerance;
    return os.str();
}

std::string recognize_zeta_multiple(const Real& value, int weight,
                                    const PrecisionContext& ctx) {
    Real ratio = value / zeta_int(weight, ctx);
    mpq_class x;
    mpfr_get_q(x.get_mpq_t(), ratio.raw());  // stored value is dyadic, exact
    mpq_class tol(std::max(ratio.error_bound() * 4, 1e-45));
    mpq_class q;
    if (!rationalize_exact(x, 1000000000L, tol, &q)) return "";
    std::ostringstream os;
    os << rational_str(q) << " * zeta(" << weight << ")";
    return os.str();
}

}  // namespace tzeta
