#include "tzeta/nested_sum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

#include "tzeta/error.hpp"
#include "tzeta/rational.hpp"
#include "tzeta/special.hpp"

namespace tzeta {

namespace {

// ---------------------------------------------------------------------
// Iterated-integral words.  A form is a small linear combination of
// dt/(t - pole) terms with exact rational coefficients; pole 0 is dt/t.
// Every evaluator below encodes its value as (-1)^depth I(0; word; 1)
// and rearranges that integral by composing the path at t = 1/2, which
// turns each piece into a series with |coefficient of z^m| <= 2^-m.
// ---------------------------------------------------------------------

struct Term {
    mpq_class coef;
    long pole;
};
using Form = std::vector<Term>;
using Word = std::vector<Form>;

bool has_pole(const Form& f, long p) {
    return std::any_of(f.begin(), f.end(), [&](const Term& t) { return t.pole == p; });
}

// AMZV word: e_{y_1} e_0^{k_1-1} ... e_{y_d} e_0^{k_d-1},  y_i = prod_{j>=i} eps_j.
Word word_amzv(const SignedIndex& sidx) {
    const auto& ps = sidx.parts();
    const int d = sidx.depth();
    std::vector<long> y(static_cast<std::size_t>(d), 1);
    long acc = 1;
    for (int i = d - 1; i >= 0; --i) {
        acc *= ps[static_cast<std::size_t>(i)].sign;
        y[static_cast<std::size_t>(i)] = acc;
    }
    Word w;
    for (int i = 0; i < d; ++i) {
        w.push_back(Form{{mpq_class(1), y[static_cast<std::size_t>(i)]}});
        for (int j = 1; j < ps[static_cast<std::size_t>(i)].k; ++j)
            w.push_back(Form{{mpq_class(1), 0}});
    }
    return w;
}

// Interpolated word: positions 2..d carry the merge letter e_y - r e_0.
Word word_interp(const SignedIndex& sidx, const mpq_class& r) {
    Word w = word_amzv(sidx);
    const auto& ps = sidx.parts();
    std::size_t pos = 0;
    for (int i = 0; i < sidx.depth(); ++i) {
        if (i > 0) w[pos].push_back({-r, 0});
        pos += static_cast<std::size_t>(ps[static_cast<std::size_t>(i)].k);
    }
    return w;
}

// t-value word: first letter (e_1 - e_{-1})/2, later ones (e_1 + e_{-1})/2.
Word word_t(const Index& idx) {
    Word w;
    const mpq_class half(1, 2);
    for (int i = 0; i < idx.depth(); ++i) {
        if (i == 0)
            w.push_back(Form{{half, 1}, {-half, -1}});
        else
            w.push_back(Form{{half, 1}, {half, -1}});
        for (int j = 1; j < idx.part(i); ++j) w.push_back(Form{{mpq_class(1), 0}});
    }
    return w;
}

// sigma: the change of variables s = 1 - t on forms (pole p -> 1 - p).
Form sigma(const Form& f) {
    Form g;
    g.reserve(f.size());
    for (const auto& t : f) g.push_back({t.coef, 1 - t.pole});
    return g;
}

// log2 of the series tail past m = M for a word with n non-e0-only
// positions: sum_{m>M} W m^{n-1} 2^-m / (n-1)! <= 2.8 W 2^{-(M+1)} (M+1)^{n-1}/(n-1)!
// (valid once M >= 4(n-1); all poles have |pole| >= 1 and |z| = 1/2).
double tail_log2(long M, int n, double log2W) {
    double s = n >= 1 ? static_cast<double>(n - 1) : 0.0;
    return 1.49 + log2W - static_cast<double>(M + 1) +
           s * std::log2(static_cast<double>(M + 1)) -
           std::lgamma(s + 1.0) / 0.6931471805599453;
}

long choose_M(int n, double log2W, mpfr_prec_t wp, long cap) {
    long M = std::max<long>(4 * n + 8, 32);
    while (tail_log2(M, n, log2W) > -static_cast<double>(wp) - 4) {
        M += std::max<long>(8, (M / 8));
        if (M > cap) throw MaxTermsError("midpoint series truncation exceeds max_terms");
    }
    return M;
}

// One DP pass: values of I(0; first j letters; 1/2) for j = 0..n.
// State c[m] holds the z^m coefficient of the current prefix integral
// (c[0] is the constant term, 1 only for the empty word).
std::vector<Real> half_prefix_values(const Word& w, long M, mpfr_prec_t wp,
                                     double tail_err) {
    const std::size_t n = w.size();
    std::vector<Real> c(static_cast<std::size_t>(M) + 1, Real(wp));
    c[0] = Real::of_long(1, wp);
    std::vector<Real> zpow(static_cast<std::size_t>(M) + 1, Real(wp));
    for (long m = 0; m <= M; ++m) zpow[static_cast<std::size_t>(m)] = Real::pow2(-m, wp);

    std::vector<Real> values;
    values.reserve(n + 1);
    values.push_back(Real::of_long(1, wp));

    std::vector<Real> next(static_cast<std::size_t>(M) + 1, Real(wp));
    for (std::size_t j = 0; j < n; ++j) {
        const Form& L = w[j];
        if (j == 0 && has_pole(L, 0))
            throw DivergentError("word begins with dt/t: divergent at 0");
        // next[m] = (c0 * c[m] - sum_y a_y b_y(m)) / m
        for (long m = 0; m <= M; ++m) next[static_cast<std::size_t>(m)] = Real(wp);
        for (const auto& t : L) {
            if (t.pole == 0) {
                Real a = Real::of_rational(t.coef, wp);
                for (long m = 1; m <= M; ++m) {
                    next[static_cast<std::size_t>(m)] +=
                        (a * c[static_cast<std::size_t>(m)]).div_long(m);
                }
            } else {
                Real a = Real::of_rational(t.coef, wp);
                Real inv_y = Real::of_long(1, wp).div_long(t.pole);
                Real b(wp);  // b_y(m) = sum_{m'<m} c[m'] y^{m'-m}
                for (long m = 1; m <= M; ++m) {
                    b = (b + c[static_cast<std::size_t>(m - 1)]) * inv_y;
                    next[static_cast<std::size_t>(m)] -= (a * b).div_long(m);
                }
            }
        }
        std::swap(c, next);
        c[0] = Real(wp);  // nonempty words vanish at z = 0
        Real v = Real(wp);
        for (long m = M; m >= 1; --m)
            v += c[static_cast<std::size_t>(m)] * zpow[static_cast<std::size_t>(m)];
        v.widen_error(tail_err);
        values.push_back(v);
    }
    return values;
}

// I(0; w; 1) by path composition at 1/2.
Real iterint01(const Word& w, const PrecisionContext& ctx) {
    const mpfr_prec_t wp = ctx.work_prec() + 32;
    const std::size_t n = w.size();
    if (n == 0) return Real::of_long(1, wp);

    double log2W = 0;
    for (const auto& f : w) {
        double s = 0;
        for (const auto& t : f) {
            s += std::fabs(t.coef.get_d());
            if (t.pole != 0 && std::labs(t.pole) < 1)
                throw DomainError("pole inside the convergence disc");
        }
        log2W += std::log2(std::max(s, 1e-30));
    }
    const long M = choose_M(static_cast<int>(n), log2W, wp, ctx.max_terms);
    const double terr = std::exp2(tail_log2(M, static_cast<int>(n), log2W));

    std::vector<Real> pre = half_prefix_values(w, M, wp, terr);

    Word rw;
    rw.reserve(n);
    for (std::size_t j = n; j-- > 0;) rw.push_back(sigma(w[j]));
    if (has_pole(rw[0], 0))
        throw DivergentError("word ends with a pole at 1: divergent at the endpoint");
    std::vector<Real> suf = half_prefix_values(rw, M, wp, terr);

    Real total(wp);
    for (std::size_t i = 0; i <= n; ++i) {
        Real s = suf[n - i];
        if ((n - i) % 2 == 1) s = -s;
        total += pre[i] * s;
    }
    return total;
}

Real signed_value(const Word& w, int depth, const PrecisionContext& ctx) {
    Real v = iterint01(w, ctx);
    return depth % 2 == 1 ? -v : v;
}

// ---------------------------------------------------------------------
// memo cache
// ---------------------------------------------------------------------

std::shared_mutex g_cache_mutex;
std::map<std::string, Real> g_cache;

bool cache_get(const std::string& key, Real* out) {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it == g_cache.end()) return false;
    *out = it->second;
    return true;
}

void cache_put(const std::string& key, const Real& v) {
    std::unique_lock lock(g_cache_mutex);
    g_cache.emplace(key, v);
}

std::string cache_key(char fam, const std::string& body, mpfr_prec_t wp) {
    return std::string(1, fam) + std::to_string(static_cast<long>(wp)) + "|" + body;
}

}  // namespace

Real eval_amzv(const SignedIndex& sidx, const PrecisionContext& ctx) {
    if (!sidx.convergent())
        throw DivergentError("divergent alternating value: trailing part " +
                             sidx.str().substr(sidx.str().find_last_of(',') + 1) +
                             " is an unsigned 1");
    if (sidx.empty()) return Real::of_long(1, ctx.work_prec());
    std::string key = cache_key('a', sidx.str(), ctx.work_prec());
    Real v;
    if (cache_get(key, &v)) return v;
    v = signed_value(word_amzv(sidx), sidx.depth(), ctx);
    cache_put(key, v);
    return v;
}

Real eval_mzv(const Index& idx, const PrecisionContext& ctx) {
    if (!idx.admissible())
        throw DivergentError("zeta(" + idx.str() + ") diverges: last part must be >= 2");
    return eval_amzv(SignedIndex(idx), ctx);
}

Real eval_interpolated(const SignedIndex& sidx, const mpq_class& r,
                       const PrecisionContext& ctx) {
    if (r < 0 || r > 1) throw DomainError("interpolation parameter must lie in [0,1]");
    if (!sidx.convergent())
        throw DivergentError("divergent interpolated value " + sidx.str() +
                             ": contracted constituent ends in an unsigned 1");
    if (sidx.empty()) return Real::of_long(1, ctx.work_prec());
    if (r == 0 || sidx.depth() == 1) return eval_amzv(sidx, ctx);
    std::string key = cache_key('i', rational_str(r) + "|" + sidx.str(), ctx.work_prec());
    Real v;
    if (cache_get(key, &v)) return v;
    v = signed_value(word_interp(sidx, r), sidx.depth(), ctx);
    cache_put(key, v);
    return v;
}

Real eval_interpolated(const Index& idx, const mpq_class& r, const PrecisionContext& ctx) {
    return eval_interpolated(SignedIndex(idx), r, ctx);
}

Real eval_zeta_star(const Index& idx, const PrecisionContext& ctx) {
    return eval_interpolated(idx, mpq_class(1), ctx);
}

Real eval_zeta_half(const Index& idx, const PrecisionContext& ctx) {
    return eval_interpolated(idx, mpq_class(1, 2), ctx);
}

Real eval_mtv(const Index& idx, const PrecisionContext& ctx, MtvRoute route) {
    if (!idx.admissible())
        throw DivergentError("t(" + idx.str() + ") diverges: last part must be >= 2");
    if (idx.empty()) return Real::of_long(1, ctx.work_prec());
    switch (route) {
        case MtvRoute::direct: {
            // truncation point for tail ~ (2M)^{1-k_d}; honest (possibly
            // large) bound when the target is out of brute-force reach
            const int kd = idx.parts().back();
            double m_needed = 0.5 * std::pow(10.0, static_cast<double>(ctx.target_digits) /
                                                       (kd - 1));
            long M = m_needed > 2e5 ? 200000 : std::max<long>(1000, static_cast<long>(m_needed));
            return bruteforce::mtv(idx, std::min(M, ctx.max_terms));
        }
        case MtvRoute::via_amzv: {
            const int d = idx.depth();
            const mpfr_prec_t wp = ctx.work_prec() + 32;
            Real acc(wp);
            for (long mask = 0; mask < (1L << d); ++mask) {
                std::vector<SignedIndex::Part> parts;
                int sgn = 1;
                for (int i = 0; i < d; ++i) {
                    int s = (mask >> i) & 1 ? -1 : +1;
                    sgn *= s;
                    parts.push_back({idx.part(i), s});
                }
                Real z = eval_amzv(SignedIndex(parts), ctx);
                acc += sgn > 0 ? z : -z;
            }
            return acc.ldexp(-d);
        }
        case MtvRoute::split: {
            std::string key = cache_key('t', idx.str(), ctx.work_prec());
            Real v;
            if (cache_get(key, &v)) return v;
            v = signed_value(word_t(idx), idx.depth(), ctx);
            cache_put(key, v);
            return v;
        }
    }
    throw DomainError("unknown route");
}

Real eval_rescaled(RescaledFamily fam, const Index& idx, const PrecisionContext& ctx) {
    switch (fam) {
        case RescaledFamily::zeta_half_tilde:
            return eval_zeta_half(idx, ctx).ldexp(idx.depth());
        case RescaledFamily::t_tilde:
            return eval_mtv(idx, ctx).ldexp(idx.weight());
    }
    throw DomainError("unknown rescaled family");
}

Real eval_rescaled(RescaledFamily fam, const SignedIndex& sidx,
                   const PrecisionContext& ctx) {
    if (fam != RescaledFamily::zeta_half_tilde)
        throw DomainError("only the zeta-half rescaling accepts bars");
    return eval_interpolated(sidx, mpq_class(1, 2), ctx).ldexp(sidx.depth());
}

Real evaluate(const EvalRequest& req, const PrecisionContext& ctx) {
    switch (req.family) {
        case EvalFamily::AMZV:
            if (req.rescale) throw DomainError("no rescaling defined for plain AMZVs");
            return eval_amzv(req.index, ctx);
        case EvalFamily::MZV:
            if (req.rescale) throw DomainError("no rescaling defined for plain MZVs");
            if (!req.index.all_positive()) throw DomainError("MZV request carries bars");
            return eval_mzv(req.index.unsigned_index(), ctx);
        case EvalFamily::MtV: {
            if (!req.index.all_positive()) throw DomainError("t-value request carries bars");
            Real v = eval_mtv(req.index.unsigned_index(), ctx, req.route);
            return req.rescale ? v.ldexp(req.index.weight()) : v;
        }
        case EvalFamily::Interpolated: {
            Real v = eval_interpolated(req.index, req.r, ctx);
            return req.rescale ? v.ldexp(req.index.depth()) : v;
        }
    }
    throw DomainError("unknown family");
}

std::vector<std::pair<mpq_class, SignedIndex>> interpolation_expansion(
    const SignedIndex& sidx, const mpq_class& r) {
    std::vector<std::pair<mpq_class, SignedIndex>> out;
    const int d = sidx.depth();
    if (d == 0) {
        out.emplace_back(mpq_class(1), sidx);
        return out;
    }
    const auto& ps = sidx.parts();
    for (long mask = 0; mask < (1L << (d - 1)); ++mask) {
        std::vector<SignedIndex::Part> parts;
        parts.push_back(ps[0]);
        int merges = 0;
        for (int i = 1; i < d; ++i) {
            if ((mask >> (i - 1)) & 1) {
                parts.back().k += ps[static_cast<std::size_t>(i)].k;
                parts.back().sign *= ps[static_cast<std::size_t>(i)].sign;
                ++merges;
            } else {
                parts.push_back(ps[static_cast<std::size_t>(i)]);
            }
        }
        out.emplace_back(rational_pow(r, merges), SignedIndex(std::move(parts)));
    }
    return out;
}

// ---------------------------------------------------------------------
// brute-force oracles
// ---------------------------------------------------------------------

namespace bruteforce {

namespace {

// Truncated nested sum with denominators D(m) = spacing*m - offset; tail
// bounded by prod_i (H_i + ln growth) integrated against D^{-k_d}.
Real nested_direct(const SignedIndex& sidx, const mpq_class& r, bool strict,
                   long spacing, long M) {
    const int d = sidx.depth();
    if (d == 0) return Real::of_long(1, 96);
    if (sidx.parts().back().k < 2)
        throw DomainError("brute-force oracle needs last exponent >= 2");
    const mpfr_prec_t wp = 128;
    auto denom = [&](long m) { return spacing * m - (spacing - 1); };

    std::vector<Real> A(static_cast<std::size_t>(M) + 1, Real(wp));
    std::vector<Real> P(static_cast<std::size_t>(M) + 1, Real(wp));
    std::vector<double> H(static_cast<std::size_t>(d), 0.0);
    Real rr = Real::of_rational(r, wp);

    for (int lvl = 0; lvl < d; ++lvl) {
        const auto& part = sidx.parts()[static_cast<std::size_t>(lvl)];
        std::vector<Real> nextA(static_cast<std::size_t>(M) + 1, Real(wp));
        for (long m = 1; m <= M; ++m) {
            Real t(wp);
            mpfr_ui_pow_ui(t.raw(), static_cast<unsigned long>(denom(m)),
                           static_cast<unsigned long>(part.k), MPFR_RNDN);
            t.set_error_bound(t.ulp());
            H[static_cast<std::size_t>(lvl)] += 1.0 / t.to_double();
            Real num(wp);
            if (lvl == 0) {
                num = Real::of_long(1, wp);
            } else {
                num = P[static_cast<std::size_t>(m - 1)];
                if (!strict) num += rr * A[static_cast<std::size_t>(m)];
            }
            Real v = num / t;
            if (part.sign < 0 && m % 2 == 1) v = -v;
            nextA[static_cast<std::size_t>(m)] = v;
        }
        A = std::move(nextA);
        P[0] = Real(wp);
        for (long m = 1; m <= M; ++m)
            P[static_cast<std::size_t>(m)] =
                P[static_cast<std::size_t>(m - 1)] + A[static_cast<std::size_t>(m)];
    }

    Real total = P[static_cast<std::size_t>(M)];

    // tail bound: prod_{i<d} (H_i + L) with L = ln(D(m)/D(M)) expanded
    // binomially; integral of ln^j(u/X) u^-k is X^{1-k} j!/(k-1)^{j+1}.
    const int kd = sidx.parts().back().k;
    const double X = static_cast<double>(denom(M));
    double Amax = 1.0;
    for (int i = 0; i + 1 < d; ++i) Amax = std::max(Amax, H[static_cast<std::size_t>(i)]);
    double bound = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= d - 1; ++j) {
        double jfact = std::tgamma(static_cast<double>(j) + 1.0);
        bound += binom * std::pow(Amax, d - 1 - j) * jfact /
                 std::pow(static_cast<double>(kd - 1), j + 1);
        binom = binom * static_cast<double>(d - 1 - j) / static_cast<double>(j + 1);
    }
    bound *= std::pow(X, 1.0 - kd) / static_cast<double>(spacing);
    if (!strict) bound *= std::pow(2.0, d - 1);  // non-strict tuple overcount
    total.widen_error(bound * 1.01 + 1e4 * total.ulp());
    return total;
}

}  // namespace

Real mzv(const Index& idx, long M) {
    return nested_direct(SignedIndex(idx), mpq_class(0), true, 1, M);
}

Real amzv(const SignedIndex& sidx, long M) {
    return nested_direct(sidx, mpq_class(0), true, 1, M);
}

Real mtv(const Index& idx, long M) {
    return nested_direct(SignedIndex(idx), mpq_class(0), true, 2, M);
}

Real interpolated(const SignedIndex& sidx, const mpq_class& r, long M) {
    return nested_direct(sidx, r, false, 1, M);
}

}  // namespace bruteforce

}  // namespace tzeta
