#include "tzeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "tzeta/closed_form.hpp"
#include "tzeta/error.hpp"
#include "tzeta/hypergeom.hpp"
#include "tzeta/nested_sum.hpp"
#include "tzeta/rational.hpp"
#include "tzeta/special.hpp"
#include "tzeta/stuffle.hpp"

namespace tzeta {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double tol_of(const VerifyOptions& opts, const PrecisionContext& ctx) {
    return opts.tolerance.value_or(default_tolerance(ctx));
}

Index sub_index(const Index& idx, int from, int len) {
    std::vector<int> p(idx.parts().begin() + from, idx.parts().begin() + from + len);
    return Index(std::move(p));
}

Real tt(const Index& idx, const PrecisionContext& ctx) {
    return eval_rescaled(RescaledFamily::t_tilde, idx, ctx);
}

Real zh(const Index& idx, const PrecisionContext& ctx) {
    return eval_rescaled(RescaledFamily::zeta_half_tilde, idx, ctx);
}

void require_maximal_height(const Index& idx, const char* what) {
    if (!idx.maximal_height())
        throw DomainError(std::string(what) + " requires a maximal-height index (all parts >= 2), got " +
                          idx.str());
}

}  // namespace

VerificationReport verify_convolution(const Index& idx, const PrecisionContext& ctx,
                                      const VerifyOptions& opts) {
    require_maximal_height(idx, "convolution identity");
    auto t0 = Clock::now();
    const int d = idx.depth();
    Index k = reverse(idx);
    Real lhs = -zh(bl(idx), ctx);
    Real rhs(ctx.work_prec());
    for (int i = 0; i <= d; ++i) {
        Real term = tt(sub_index(k, 0, i), ctx) * eval_zeta_star(sub_index(idx, 0, d - i), ctx);
        rhs += (i % 2) ? -term : term;
    }
    return make_report("convolution", idx.str(), lhs, rhs, tol_of(opts, ctx), ms_since(t0));
}

VerificationReport verify_descent(const Index& idx, const PrecisionContext& ctx,
                                  const VerifyOptions& opts) {
    require_maximal_height(idx, "descent formula");
    auto t0 = Clock::now();
    const int d = idx.depth();
    Real lhs = tt(idx, ctx);
    Real rhs = eval_mzv(idx, ctx);
    for (int i = 1; i <= d; ++i) {
        Real term = eval_mzv(sub_index(idx, i, d - i), ctx) *
                    zh(bl(sub_index(idx, 0, i).reversed()), ctx);
        rhs += (i % 2) ? term : -term;
    }
    return make_report("descent", idx.str(), lhs, rhs, tol_of(opts, ctx), ms_since(t0));
}

VerificationReport verify_matrix(const Index& idx, const PrecisionContext& ctx,
                                 const VerifyOptions& opts) {
    require_maximal_height(idx, "matrix formulation");
    auto t0 = Clock::now();
    const int d = idx.depth();
    const int n = d + 1;
    const mpfr_prec_t wp = ctx.work_prec();
    const auto& ks = idx.parts();

    auto run_rev = [&](int i, int j) {  // zeta*(k_{d-i}, ..., k_{d-j+1}), length j-i
        std::vector<int> p;
        for (int t = d - i - 1; t >= d - j; --t) p.push_back(ks[static_cast<std::size_t>(t)]);
        return eval_zeta_star(Index(std::move(p)), ctx);
    };
    auto run_fwd = [&](int i, int j) {  // zeta(k_{d-j+1}, ..., k_{d-i}), length j-i
        std::vector<int> p;
        for (int t = d - j; t <= d - i - 1; ++t) p.push_back(ks[static_cast<std::size_t>(t)]);
        return eval_mzv(Index(std::move(p)), ctx);
    };

    std::vector<std::vector<Real>> mstar(static_cast<std::size_t>(n)),
        mzeta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        mstar[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), Real(wp));
        mzeta[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), Real(wp));
        for (int j = 0; j < n; ++j) {
            if (j < i) continue;
            if (j == i) {
                mstar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Real::of_long(1, wp);
                mzeta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Real::of_long(1, wp);
                continue;
            }
            mstar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = run_rev(i, j);
            Real z = run_fwd(i, j);
            mzeta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ((j - i) % 2) ? -z : z;
        }
    }

    Real maxdev(wp);
    auto consider = [&](const Real& dev) {
        // report the largest deviation, carrying the largest bound seen
        double e = std::max(maxdev.error_bound(), dev.error_bound());
        if (dev.cmp(maxdev) > 0) maxdev = dev;
        maxdev.set_error_bound(e);
    };
    // product = identity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Real acc(wp);
            for (int l = 0; l < n; ++l)
                acc += mstar[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                       mzeta[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
            if (i == j) acc -= Real::of_long(1, wp);
            consider(acc.abs());
        }
    // column equality: v_lhs = Mstar v_t
    std::vector<Real> vlhs(static_cast<std::size_t>(n), Real(wp)),
        vt(static_cast<std::size_t>(n), Real(wp));
    for (int i = 0; i < d; ++i)
        vlhs[static_cast<std::size_t>(i)] = -zh(bl(sub_index(idx, 0, d - i).reversed()), ctx);
    vlhs[static_cast<std::size_t>(d)] = Real::of_long(1, wp);
    for (int j = 0; j < d; ++j) {
        Real t = tt(sub_index(idx, 0, d - j), ctx);
        vt[static_cast<std::size_t>(j)] = ((d - j) % 2) ? -t : t;
    }
    vt[static_cast<std::size_t>(d)] = Real::of_long(1, wp);
    for (int i = 0; i < n; ++i) {
        Real acc(wp);
        for (int l = 0; l < n; ++l)
            acc += mstar[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] *
                   vt[static_cast<std::size_t>(l)];
        consider((acc - vlhs[static_cast<std::size_t>(i)]).abs());
    }

    return make_report("matrix", idx.str(), maxdev, Real(wp), tol_of(opts, ctx), ms_since(t0));
}

VerificationReport verify_antipode(const Index& idx, const PrecisionContext& ctx,
                                   const VerifyOptions& opts) {
    if (!idx.admissible() || !reverse(idx).admissible())
        throw DomainError("antipode check needs idx and reverse(idx) admissible: " + idx.str());
    const int d = idx.depth();
    for (int i = 1; i < d; ++i) {
        if (idx.part(i - 1) < 2)
            throw DivergentError("antipode constituent zeta(" + sub_index(idx, 0, i).str() +
                                 ") diverges");
        if (idx.part(i) < 2)
            throw DivergentError("antipode constituent zeta*(" +
                                 sub_index(idx, i, d - i).reversed().str() + ") diverges");
    }
    auto t0 = Clock::now();
    const mpfr_prec_t wp = ctx.work_prec();
    Real lhs(wp);
    for (int i = 0; i <= d; ++i) {
        Real term = eval_mzv(sub_index(idx, 0, i), ctx) *
                    eval_zeta_star(sub_index(idx, i, d - i).reversed(), ctx);
        lhs += (i % 2) ? -term : term;
    }
    return make_report("stuffle-antipode", idx.str(), lhs, Real(wp), tol_of(opts, ctx),
                       ms_since(t0));
}

VerificationReport verify_two_one(const Index& idx, const PrecisionContext& ctx,
                                  const VerifyOptions& opts) {
    if (!idx.admissible() || idx.empty())
        throw DomainError("two-one check needs a nonempty admissible index");
    auto t0 = Clock::now();
    SignedIndex barred = bar_evens(bl(idx));
    Real lhs = eval_rescaled(RescaledFamily::zeta_half_tilde, barred, ctx);
    Real zs = eval_zeta_star(idx, ctx);
    Real rhs = idx.part(0) == 1 ? zs : -zs;
    return make_report("two-one", idx.str(), lhs, rhs, tol_of(opts, ctx), ms_since(t0));
}

VerificationReport verify_t12(const PrecisionContext& ctx, const VerifyOptions& opts) {
    auto t0 = Clock::now();
    const mpfr_prec_t wp = ctx.work_prec();
    Real lhs = tt(Index({1, 2}), ctx);
    Real rhs = zeta_int(3, ctx).mul_long(-7).div_long(2) +
               Real::pi(wp).pow_long(2) * Real::log2_const(wp);
    return make_report("t12-non-descent", "1,2", lhs, rhs, tol_of(opts, ctx), ms_since(t0));
}

VerificationReport verify_stuffle(const Index& a, const Index& b,
                                  const PrecisionContext& ctx, const VerifyOptions& opts) {
    auto t0 = Clock::now();
    Real lhs = eval_mzv(a, ctx) * eval_mzv(b, ctx);
    Real rhs(ctx.work_prec());
    for (const auto& [idx, coef] : stuffle_product(a, b)) {
        if (!idx.admissible())
            throw DivergentError("stuffle term zeta(" + idx.str() + ") diverges");
        rhs += eval_mzv(idx, ctx).mul_long(coef);
    }
    return make_report("stuffle", a.str() + " * " + b.str(), lhs, rhs, tol_of(opts, ctx),
                       ms_since(t0));
}

namespace {

std::string ab_str(int a, int b) {
    std::ostringstream os;
    os << "a=" << a << ",b=" << b;
    return os.str();
}

// closed-form-vs-oracle and hypergeometric property checks
void collect_property_tasks(std::vector<std::function<VerificationReport()>>& tasks,
                            const PrecisionContext& ctx, const VerifyOptions& opts) {
    const double tol = tol_of(opts, ctx);
    const mpfr_prec_t wp = ctx.work_prec();

    // repeated-argument series: z_series(2) coefficients vs sine product
    tasks.push_back([=] {
        auto t0 = Clock::now();
        ZSeries z = z_series(2, 5, ctx);
        Real maxdev(wp);
        for (int n = 0; n <= 5; ++n) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * n + 1));
            Real want = Real::pi(wp).pow_long(2 * n) / Real::of_rational(mpq_class(f), wp);
            Real dev = (ps_coeff(z.series, n) - want).abs();
            if (dev.cmp(maxdev) > 0) maxdev = dev;
        }
        return make_report("zrep-sine-product", "s=2,n<=5", maxdev, Real(wp), tol, ms_since(t0));
    });

    // star/t repeated series vs direct evaluation
    tasks.push_back([=] {
        auto t0 = Clock::now();
        auto star = repeated_star_series(2, 3, ctx);
        Real dev = (ps_coeff(star, 2) - eval_zeta_star(Index({2, 2}), ctx)).abs();
        auto ts = repeated_t_series(2, 2, ctx);
        Real dev2 = (ps_coeff(ts, 1) - eval_mtv(Index({2}), ctx)).abs();
        Real m = dev.cmp(dev2) > 0 ? dev : dev2;
        return make_report("zrepgs-series", "s=2", m, Real(wp), tol, ms_since(t0));
    });

    // three routes for the (1,{1}^{a-3},3,...,2) zeta-half family
    for (int a = 3; a <= 6; ++a)
        for (int b = 1; b <= 3; ++b) {
            tasks.push_back([=] {
                auto t0 = Clock::now();
                return make_report("prop21-qform-vs-coeff", ab_str(a, b),
                                   prop21_qform(a, b, ctx), prop21_coeff(a, b, ctx), tol,
                                   ms_since(t0));
            });
            if (a % 2 == 0 && a >= 4)
                tasks.push_back([=] {
                    auto t0 = Clock::now();
                    return make_report("prop21-cotangent-vs-coeff", ab_str(a, b),
                                       prop21_cotangent(a / 2, b, ctx),
                                       prop21_coeff(a, b, ctx), tol, ms_since(t0));
                });
            if (a * b <= 12)
                tasks.push_back([=] {
                    auto t0 = Clock::now();
                    std::vector<int> parts{1};
                    for (int r = 0; r < b - 1; ++r) {
                        parts.insert(parts.end(), static_cast<std::size_t>(a - 3), 1);
                        parts.push_back(3);
                    }
                    parts.insert(parts.end(), static_cast<std::size_t>(a - 3), 1);
                    parts.push_back(2);
                    Real oracle = eval_zeta_half(Index(parts), ctx);
                    return make_report("prop21-vs-nested-sum", ab_str(a, b),
                                       prop21_coeff(a, b, ctx), oracle, tol, ms_since(t0));
                });
        }

    // parity reductions vs nested sums, odd weights <= 11
    for (int w = 5; w <= 11; w += 2)
        for (int a = 1; a + 2 <= w; ++a) {
            const int b = w - a;
            tasks.push_back([=] {
                auto t0 = Clock::now();
                return make_report("parity-double-zeta", ab_str(a, b),
                                   parity_double_zeta(a, b, ctx),
                                   eval_mzv(Index({a, b}), ctx), tol, ms_since(t0));
            });
            tasks.push_back([=] {
                auto t0 = Clock::now();
                return make_report("parity-double-t", ab_str(a, b), parity_double_t(a, b, ctx),
                                   eval_mtv(Index({a, b}), ctx), tol, ms_since(t0));
            });
        }

    // uniform t(2,k)
    for (int k = 2; k <= 6; ++k)
        tasks.push_back([=] {
            auto t0 = Clock::now();
            return make_report("t-two-k", "k=" + std::to_string(k), t_two_k(k, ctx),
                               eval_mtv(Index({2, k}), ctx), tol, ms_since(t0));
        });

    // zeta-half({1}^n, 4) and zeta-half(3, {1}^{n-1}, 2) evaluations
    for (int n = 0; n <= 6; ++n)
        tasks.push_back([=] {
            auto t0 = Clock::now();
            std::vector<int> parts(static_cast<std::size_t>(n), 1);
            parts.push_back(4);
            return make_report("z114-vs-nested-sum", "n=" + std::to_string(n),
                               prop22_z114(n, ctx), eval_zeta_half(Index(parts), ctx), tol,
                               ms_since(t0));
        });
    for (int m = 0; m <= 2; ++m)
        tasks.push_back([=] {
            auto t0 = Clock::now();
            return make_report("z114-odd-branch", "m=" + std::to_string(m),
                               prop22_z114_odd(m, ctx), prop22_z114(2 * m + 1, ctx), tol,
                               ms_since(t0));
        });
    for (int n = 1; n <= 6; ++n)
        tasks.push_back([=] {
            auto t0 = Clock::now();
            std::vector<int> parts{3};
            parts.insert(parts.end(), static_cast<std::size_t>(n - 1), 1);
            parts.push_back(2);
            return make_report("z3112-vs-nested-sum", "n=" + std::to_string(n),
                               prop22_z3112(n, ctx), eval_zeta_half(Index(parts), ctx), tol,
                               ms_since(t0));
        });
    for (int m = 0; m <= 2; ++m)
        tasks.push_back([=] {
            auto t0 = Clock::now();
            return make_report("z3112-even-branch", "m=" + std::to_string(m),
                               prop22_z3112_even(m, ctx), prop22_z3112(2 * m + 1, ctx), tol,
                               ms_since(t0));
        });
    for (int n = 1; n <= 6; ++n)
        tasks.push_back([=] {
            auto t0 = Clock::now();
            return make_report("z114-plus-z3112", "n=" + std::to_string(n),
                               prop22_z114(n, ctx) + prop22_z3112(n, ctx), prop22_sum(n, ctx),
                               tol, ms_since(t0));
        });

    // zeta-half({1}^i, 3, {1}^j, 2), i + j even, weight <= 10
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            if ((i + j) % 2) continue;
            tasks.push_back([=] {
                auto t0 = Clock::now();
                std::vector<int> parts(static_cast<std::size_t>(i), 1);
                parts.push_back(3);
                parts.insert(parts.end(), static_cast<std::size_t>(j), 1);
                parts.push_back(2);
                std::ostringstream os;
                os << "i=" << i << ",j=" << j;
                return make_report("z1312-vs-nested-sum", os.str(), prop23(i, j, ctx),
                                   eval_zeta_half(Index(parts), ctx), tol, ms_since(t0));
            });
        }

    // generating-series lemmas and the 4F3 identity
    for (const char* xs : {"1/10", "1/5"}) {
        mpq_class q = parse_rational(xs);
        tasks.push_back([=] {
            auto t0 = Clock::now();
            auto dv = gs_zeta_half_33n2(Real::of_rational(q, wp), 0, ctx);
            Real cl = dv.closed.re();
            cl.widen_error(dv.closed.im().mag() + dv.closed.im().error_bound());
            return make_report("gs-zeta-half-33n2", std::string("x=") + xs, cl, dv.series,
                               tol, ms_since(t0));
        });
        tasks.push_back([=] {
            auto t0 = Clock::now();
            auto dv = gs_t_3n(Real::of_rational(q, wp), ctx);
            Real cl = dv.closed.re();
            cl.widen_error(dv.closed.im().mag() + dv.closed.im().error_bound());
            return make_report("gs-t-3n", std::string("x=") + xs, cl, dv.series, tol,
                               ms_since(t0));
        });
        tasks.push_back([=] {
            auto t0 = Clock::now();
            auto dv = gs_zstar_23n(Real::of_rational(q, wp), 0, ctx);
            Real cl = dv.closed.re();
            cl.widen_error(dv.closed.im().mag() + dv.closed.im().error_bound());
            return make_report("gs-zstar-23n", std::string("x=") + xs, cl, dv.series, tol,
                               ms_since(t0));
        });
        tasks.push_back([=] {
            auto t0 = Clock::now();
            auto dv = gs_t_3n2(Real::of_rational(q, wp), 0, ctx);
            Real cl = dv.closed.re();
            cl.widen_error(dv.closed.im().mag() + dv.closed.im().error_bound());
            return make_report("gs-t-3n2", std::string("x=") + xs, cl, dv.series, tol,
                               ms_since(t0));
        });
    }
    for (const char* xs : {"1/10", "1/5", "3/10"}) {
        mpq_class q = parse_rational(xs);
        tasks.push_back([=] {
            VerificationReport r = check_4f3_identity(Real::of_rational(q, wp), ctx);
            if (opts.tolerance) {
                r = make_report(r.identity_id, r.inputs, r.lhs, r.rhs, *opts.tolerance,
                                r.wall_ms);
            }
            return r;
        });
    }
}

}  // namespace

std::vector<VerificationReport> verify_suite(int weight_cap, const PrecisionContext& ctx,
                                             const VerifyOptions& opts) {
    std::vector<VerificationReport> out;
    if (weight_cap < 2) return out;
    if (weight_cap > 16) throw DomainError("verify_suite: weight_cap <= 16");

    std::vector<std::function<VerificationReport()>> tasks;
    for (const auto& idx : maximal_height_indices_up_to(weight_cap)) {
        tasks.push_back([=] { return verify_convolution(idx, ctx, opts); });
        tasks.push_back([=] { return verify_descent(idx, ctx, opts); });
        tasks.push_back([=] { return verify_matrix(idx, ctx, opts); });
    }
    const int small_cap = std::min(weight_cap, 9);
    for (const auto& idx : admissible_indices_up_to(small_cap)) {
        tasks.push_back([=] { return verify_two_one(idx, ctx, opts); });
        if (idx.maximal_height())
            tasks.push_back([=] { return verify_antipode(idx, ctx, opts); });
    }
    tasks.push_back([=] { return verify_t12(ctx, opts); });
    collect_property_tasks(tasks, ctx, opts);

    out.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                out[i] = tasks[i]();
            } catch (const Error& e) {
                VerificationReport r;
                r.identity_id = "error";
                r.inputs = e.what();
                r.verdict = Verdict::fail;
                out[i] = r;
            }
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(out.begin(), out.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
                  return a.inputs < b.inputs;
              });
    return out;
}

}  // namespace tzeta
