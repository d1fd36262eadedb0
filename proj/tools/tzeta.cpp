// Command-line front end: evaluate nested-sum values, compute block
// decompositions, run identity verifications, and print the evaluation
// tables.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "tzeta/closed_form.hpp"
#include "tzeta/error.hpp"
#include "tzeta/hypergeom.hpp"
#include "tzeta/index.hpp"
#include "tzeta/nested_sum.hpp"
#include "tzeta/rational.hpp"
#include "tzeta/report.hpp"
#include "tzeta/special.hpp"
#include "tzeta/verify.hpp"

namespace {

using namespace tzeta;

struct CliConfig {
    int digits = 30;
    double tolerance = 0;  // 0: default for the context
    std::string format = "text";
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    int weight_cap = 9;
    bool timings = false;
};

PrecisionContext make_ctx(const CliConfig& cfg) { return PrecisionContext(cfg.digits); }

VerifyOptions make_opts(const CliConfig& cfg) {
    VerifyOptions o;
    if (cfg.tolerance > 0) o.tolerance = cfg.tolerance;
    o.jobs = std::max(1, cfg.jobs);
    return o;
}

int emit_reports(const std::vector<VerificationReport>& reports, const CliConfig& cfg) {
    bool all_pass = true;
    if (cfg.format == "csv") std::cout << report_csv_header() << "\n";
    for (const auto& r : reports) {
        if (cfg.format == "json")
            std::cout << report_json(r, cfg.timings) << "\n";
        else if (cfg.format == "csv")
            std::cout << report_csv_row(r) << "\n";
        else
            std::cout << report_text(r, std::min(cfg.digits, 30)) << "\n";
        all_pass = all_pass && r.pass;
    }
    if (cfg.format == "text") {
        std::size_t passed = 0;
        for (const auto& r : reports) passed += r.pass;
        std::cout << passed << "/" << reports.size() << " checks passed\n";
    }
    return all_pass ? 0 : 1;
}

void cmd_bl(const std::string& literal, bool inverse, bool as_word) {
    if (as_word) {
        if (inverse) {
            // index -> the 0/1 word whose block index it is
            std::cout << word_of_block_index(parse_index(literal)).str() << "\n";
        } else {
            std::cout << block_index(parse_word(literal)).str() << "\n";
        }
        return;
    }
    Index idx = parse_index(literal);
    if (!inverse && !idx.admissible())
        throw ParseError("index " + idx.str() + " is not admissible");
    Index out = inverse ? bl_inv(idx) : bl(idx);
    std::cout << out.str() << "\n";
}

int cmd_eval(const std::string& family, const std::string& literal, const CliConfig& cfg,
             const std::string& r_text, bool rescaled, const std::string& route) {
    PrecisionContext ctx = make_ctx(cfg);
    SignedIndex sidx = parse_signed_index(literal);
    Index idx = sidx.all_positive() ? sidx.unsigned_index() : Index();

    Real value(ctx.work_prec());
    int weight = sidx.weight();
    if (family == "mzv") {
        value = eval_mzv(idx, ctx);
    } else if (family == "amzv") {
        value = eval_amzv(sidx, ctx);
    } else if (family == "t") {
        MtvRoute rt = MtvRoute::split;
        if (route == "direct") rt = MtvRoute::direct;
        else if (route == "amzv") rt = MtvRoute::via_amzv;
        else if (!route.empty() && route != "split")
            throw ParseError("unknown route '" + route + "'");
        value = eval_mtv(idx, ctx, rt);
        if (rescaled) value = value.ldexp(idx.weight());
    } else if (family == "star") {
        value = eval_interpolated(sidx, mpq_class(1), ctx);
    } else if (family == "half" || family == "zhalf") {
        value = eval_interpolated(sidx, mpq_class(1, 2), ctx);
        if (rescaled) value = value.ldexp(sidx.depth());
    } else if (family == "interp") {
        if (r_text.empty()) throw ParseError("family 'interp' needs --r p/q");
        mpq_class r = parse_rational(r_text);
        value = eval_interpolated(sidx, r, ctx);
    } else {
        throw ParseError("unknown family '" + family +
                         "' (mzv, amzv, t, star, half, interp)");
    }

    if (cfg.format == "json") {
        std::cout << "{\"family\":\"" << family << "\",\"index\":\"" << sidx.str()
                  << "\",\"value\":\"" << value.str_value(cfg.digits)
                  << "\",\"error_bound\":" << value.error_bound() << "}\n";
    } else {
        std::cout << value.str(cfg.digits) << "\n";
        if (weight >= 2 && cfg.format == "text") {
            std::string nice = recognize_zeta_multiple(value, weight, ctx);
            if (!nice.empty()) std::cout << "  = " << nice << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& identity, const std::string& literal,
               const std::string& x_text, const CliConfig& cfg) {
    PrecisionContext ctx = make_ctx(cfg);
    VerifyOptions opts = make_opts(cfg);
    std::vector<VerificationReport> reports;

    auto need_index = [&]() {
        if (literal.empty()) throw ParseError("identity '" + identity + "' needs an index");
        return parse_index(literal);
    };

    if (identity == "convolution") {
        reports.push_back(verify_convolution(need_index(), ctx, opts));
    } else if (identity == "descent") {
        reports.push_back(verify_descent(need_index(), ctx, opts));
    } else if (identity == "matrix") {
        reports.push_back(verify_matrix(need_index(), ctx, opts));
    } else if (identity == "antipode") {
        reports.push_back(verify_antipode(need_index(), ctx, opts));
    } else if (identity == "two-one" || identity == "twoone") {
        reports.push_back(verify_two_one(need_index(), ctx, opts));
    } else if (identity == "t12") {
        reports.push_back(verify_t12(ctx, opts));
    } else if (identity == "4f3") {
        if (x_text.empty()) throw ParseError("identity '4f3' needs --x p/q");
        Real x = Real::of_rational(parse_rational(x_text), ctx.work_prec());
        reports.push_back(check_4f3_identity(x, ctx));
    } else if (identity == "all") {
        reports = verify_suite(cfg.weight_cap, ctx, opts);
    } else {
        throw ParseError("unknown identity '" + identity +
                         "' (convolution, descent, matrix, antipode, two-one, t12, 4f3, all)");
    }
    return emit_reports(reports, cfg);
}

void print_table_row(const std::string& item, const Real& value, const std::string& closed,
                     const std::string& origin, int digits) {
    std::cout << "  " << item << "\n    value  = " << value.str(digits);
    if (!closed.empty()) std::cout << "\n    closed = " << closed;
    std::cout << "\n    route  = " << origin << "\n";
}

int cmd_table(const std::string& name, const CliConfig& cfg) {
    PrecisionContext ctx = make_ctx(cfg);
    const int digits = std::min(cfg.digits, 30);
    if (name == "paper-examples") {
        std::cout << "block decomposition and convolution examples\n";
        Index j({2, 3, 4, 5});
        std::cout << "  bl(" << j.str() << ") = " << bl(j).str() << "\n";
        auto conv = verify_convolution(j, ctx);
        print_table_row("convolution at 2,3,4,5 (both sides)", conv.lhs, "", "midpoint series",
                        digits);
        auto two = verify_two_one(j, ctx);
        print_table_row("zh(" + bar_evens(bl(j)).str() + ")", two.lhs,
                        "-zeta*(2,3,4,5)", "signed interpolation", digits);
        Real t2 = eval_mtv(Index({2}), ctx);
        print_table_row("t(2)", t2, recognize_zeta_multiple(t2, 2, ctx), "odd nested sum",
                        digits);
        Real t12 = eval_rescaled(RescaledFamily::t_tilde, Index({1, 2}), ctx);
        print_table_row("tt(1,2)", t12, "-(7/2) zeta(3) + pi^2 log 2", "midpoint series",
                        digits);
        for (int n = 2; n <= 4; ++n) {
            Real tn = eval_mtv(Index({n}), ctx);
            print_table_row("t(" + std::to_string(n) + ")", tn,
                            recognize_zeta_multiple(tn, n, ctx), "odd nested sum", digits);
        }
        return 0;
    }
    if (name == "prop21") {
        std::cout << "zeta-half(1, {{1}^{a-3},3}^{b-1}, {1}^{a-3}, 2) for a=6\n";
        for (int b = 1; b <= 3; ++b) {
            Real v = prop21_coeff(6, b, ctx);
            print_table_row("(a,b) = (6," + std::to_string(b) + ")", v,
                            recognize_zeta_multiple(v, 6 * b, ctx), "series coefficient",
                            digits);
        }
        return 0;
    }
    if (name == "prop22") {
        std::cout << "zeta-half({1}^n, 4) and zeta-half(3, {1}^{n-1}, 2)\n";
        for (int n = 0; n <= 4; ++n)
            print_table_row("zeta-half({1}^" + std::to_string(n) + ",4)",
                            prop22_z114(n, ctx), "", "double-zeta reduction", digits);
        for (int n = 1; n <= 4; ++n)
            print_table_row("zeta-half(3,{1}^" + std::to_string(n - 1) + ",2)",
                            prop22_z3112(n, ctx), "", "double-zeta reduction", digits);
        return 0;
    }
    if (name == "prop23") {
        std::cout << "zeta-half({1}^i, 3, {1}^j, 2), i+j even, weight <= 9\n";
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) {
                if ((i + j) % 2) continue;
                std::ostringstream os;
                os << "(i,j) = (" << i << "," << j << ")";
                print_table_row(os.str(), prop23(i, j, ctx), "", "parity reduction", digits);
            }
        return 0;
    }
    throw ParseError("unknown table '" + name +
                     "' (paper-examples, prop21, prop22, prop23)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple zeta / t value evaluator and identity verifier"};
    app.require_subcommand(1);

    CliConfig cfg;
    if (const char* env = std::getenv("TZETA_DIGITS")) cfg.digits = std::atoi(env);

    app.add_option("--prec", cfg.digits, "decimal digits of requested accuracy");
    app.add_option("--tol", cfg.tolerance, "tolerance override for verifications");
    app.add_option("--format", cfg.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "parallel verification jobs");
    app.add_flag("--timings", cfg.timings, "include wall times in reports");

    app.fallthrough();

    auto* blc = app.add_subcommand("bl", "block decomposition of an admissible index");
    blc->fallthrough();
    std::string bl_index;
    bool bl_inv_flag = false;
    bool bl_word_flag = false;
    blc->add_option("index", bl_index, "comma-separated index, e.g. 2,3,4,5")->required();
    blc->add_flag("--inv", bl_inv_flag, "apply the inverse map");
    blc->add_flag("--word", bl_word_flag, "treat the argument as a bare 0/1 word (block index map)");

    auto* ev = app.add_subcommand("eval", "evaluate a nested-sum value");
    ev->fallthrough();
    std::string ev_family, ev_index, ev_r, ev_route;
    bool ev_rescaled = false;
    ev->add_option("family", ev_family, "mzv | amzv | t | star | half | interp")->required();
    ev->add_option("index", ev_index, "index literal; trailing 'b' marks a bar")->required();
    ev->add_option("--r", ev_r, "interpolation parameter p/q (family interp)");
    ev->add_option("--route", ev_route, "t-value route: split | amzv | direct");
    ev->add_flag("--rescaled", ev_rescaled, "2^depth (half) or 2^weight (t) rescaling");

    auto* vf = app.add_subcommand("verify", "numerically certify an identity");
    vf->fallthrough();
    std::string vf_identity, vf_index, vf_x;
    vf->add_option("identity", vf_identity,
                   "convolution | descent | matrix | antipode | two-one | t12 | 4f3 | all")
        ->required();
    vf->add_option("index", vf_index, "index literal (identity-dependent)");
    vf->add_option("--x", vf_x, "evaluation point p/q for 4f3");
    vf->add_option("--weight", cfg.weight_cap, "weight cap for 'all'");

    auto* tb = app.add_subcommand("table", "print an evaluation table");
    tb->fallthrough();
    std::string tb_name;
    tb->add_option("name", tb_name, "paper-examples | prop21 | prop22 | prop23")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cfg.digits < 10 || cfg.digits > 200) throw ParseError("--prec must be in [10, 200]");
        if (blc->parsed()) {
            cmd_bl(bl_index, bl_inv_flag, bl_word_flag);
            return 0;
        }
        if (ev->parsed()) return cmd_eval(ev_family, ev_index, cfg, ev_r, ev_rescaled, ev_route);
        if (vf->parsed()) return cmd_verify(vf_identity, vf_index, vf_x, cfg);
        if (tb->parsed()) return cmd_table(tb_name, cfg);
    } catch (const DivergentError& e) {
        std::cerr << "divergent: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
