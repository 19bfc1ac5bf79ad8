#ifndef HURSUM_EULER_SUMS_HPP
#define HURSUM_EULER_SUMS_HPP

#include "asymptotic.hpp"

#include <map>
#include <optional>
#include <string>

namespace hursum {

// The three Hurwitz-type cyclotomic Euler sum families. They differ in where
// the shift a enters: S shifts both the inner sums and the outer
// denominator, St (S-tilde) only the inner sums, R only the outer
// denominator.
enum class Family { S, St, R };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::S: return "S";
        case Family::St: return "St";
        default: return "R";
    }
}

template <class Real>
struct SumSpec {
    Family family = Family::S;
    std::vector<long> ps;
    long q = 2;
    std::vector<RootOfUnity> xs;
    RootOfUnity x;
    Cx<Real> shift{};

    long order() const { return static_cast<long>(ps.size()); }
    bool inner_shifted() const { return family != Family::R; }
    bool outer_shifted() const { return family != Family::St; }

    void validate(const PrecisionContext& ctx) const {
        if (ps.empty() || ps.size() > 3 || ps.size() != xs.size())
            throw spec_error("euler sum: order must be 1..3 with matching argument count");
        for (long p : ps)
            if (p < 1) throw spec_error("euler sum: inner exponents must be positive");
        if (q < 1) throw spec_error("euler sum: outer exponent must be positive");
        if (q == 1 && x.is_one()) throw divergence_error("euler sum: (q, x) = (1, 1) diverges");
        if (integer_lattice_distance(shift, LONG_MIN, -1) < ctx.pole_guard)
            throw domain_error("euler sum: shift within pole guard of a negative integer");
    }

    std::string str() const {
        std::string s = family_name(family);
        s += "^(a)_{";
        for (size_t j = 0; j < ps.size(); ++j) s += (j ? "," : "") + std::to_string(ps[j]);
        s += ";" + std::to_string(q) + "}(";
        for (size_t j = 0; j < xs.size(); ++j) s += (j ? "," : "") + xs[j].str();
        s += ";" + x.str() + ")";
        return s;
    }
};

// Multiple Hurwitz polylogarithm with denominator shift a:
// sum_{0<n_1<...<n_r} prod x_j^{n_j} / (n_j + a)^{k_j}
template <class Real>
struct MplSpec {
    std::vector<long> ks;
    std::vector<RootOfUnity> xs;
    Cx<Real> shift{};

    long depth() const { return static_cast<long>(ks.size()); }

    void validate(const PrecisionContext& ctx) const {
        if (ks.empty() || ks.size() > 3 || ks.size() != xs.size())
            throw spec_error("mpl: depth must be 1..3 with matching argument count");
        for (long k : ks)
            if (k < 1) throw spec_error("mpl: exponents must be positive");
        if (ks.back() == 1 && xs.back().is_one())
            throw divergence_error("mpl: (k_r, x_r) = (1, 1) is not admissible");
        if (integer_lattice_distance(shift, LONG_MIN, -1) < ctx.pole_guard)
            throw domain_error("mpl: shift within pole guard of a negative integer");
    }

    std::string str() const {
        std::string s = "Li_{";
        for (size_t j = 0; j < ks.size(); ++j) s += (j ? "," : "") + std::to_string(ks[j]);
        s += "}(";
        for (size_t j = 0; j < xs.size(); ++j) s += (j ? "," : "") + xs[j].str();
        s += ")";
        return s;
    }
};

template <class Real>
struct EvalResult {
    Cx<Real> value{};
    double error_estimate = 0;
    long terms_used = 0;
    bool accelerated = false;
};

namespace detail {

// one inner factor of an Euler sum, in limit-minus-tail form
template <class Real>
struct InnerFactor {
    bool is_harmonic = false;  // (p, x) = (1, 1): psi form, no limit
    Cx<Real> limit{};          // Li_p(x; shift+1) when not harmonic
    AsymSeries<Real> untwisted;  // series part without x_j^n twist
    std::optional<AsymSeries<Real>> twisted;  // coefficient of x_j^n
    RootOfUnity twist;
};

// small cache of tail tables per root of unity
template <class Real>
struct TableCache {
    long M;
    Cx<Real> a;
    long sigma_max;
    double tol;
    std::map<std::pair<long, long>, TailTable<Real>> tables;

    const TailTable<Real>& get(const RootOfUnity& w, int dmax) {
        auto key = std::make_pair(w.order, w.index);
        auto it = tables.find(key);
        if (it != tables.end() && it->second.dmax >= dmax) return it->second;
        TailTable<Real> t = build_tail_table<Real>(w, M, a, sigma_max, dmax, tol);
        return tables.insert_or_assign(key, std::move(t)).first->second;
    }
};

}  // namespace detail

// Direct partial summation with a crude tail bound; the oracle mode. No
// acceleration: sums exactly `terms` leading terms.
template <class Real>
EvalResult<Real> eval_euler_sum_bruteforce(const SumSpec<Real>& spec, long terms,
                                           const PrecisionContext& ctx) {
    spec.validate(ctx);
    long r = spec.order();
    std::vector<std::vector<Cx<Real>>> cyc;
    for (const auto& xj : spec.xs) cyc.push_back(xj.template power_cycle<Real>());
    auto cycx = spec.x.template power_cycle<Real>();
    std::vector<Cx<Real>> P(r);
    Cx<Real> acc{};
    double last_mag = 0;
    for (long n = 1; n <= terms; ++n) {
        Cx<Real> inv_a = reciprocal(Cx<Real>(Real(n)) + spec.shift);
        Cx<Real> inv_n = Cx<Real>(Real(1) / Real(n));
        const Cx<Real>& inner_inv = spec.inner_shifted() ? inv_a : inv_n;
        for (long j = 0; j < r; ++j)
            P[j] += cyc[j][n % spec.xs[j].order] * pow_int(inner_inv, spec.ps[j]);
        Cx<Real> term = cycx[n % spec.x.order] *
                        pow_int(spec.outer_shifted() ? inv_a : inv_n, spec.q);
        for (long j = 0; j < r; ++j) term *= P[j];
        acc += term;
        if (n == terms) last_mag = abs_d(term);
    }
    EvalResult<Real> res;
    res.value = acc;
    res.terms_used = terms;
    res.accelerated = false;
    if (spec.x.is_one()) {
        // monotone-type bound: tail <= |t_K| * K / (q - 1) modulo slow inner growth
        res.error_estimate = last_mag * static_cast<double>(terms) / std::max(1L, spec.q - 1) * 4;
    } else {
        // bounded periodic partial sums of x^n: Abel-type bound
        res.error_estimate = last_mag * 8.0 * static_cast<double>(spec.x.order) *
                             (1.0 + std::log(static_cast<double>(terms)));
    }
    return res;
}

// Accelerated evaluator. The inner finite sums are updated incrementally
// over a direct head; past the head each inner sum is replaced by its
// limit-minus-tail form, products expand into root-of-unity twisted
// asymptotic series, and each twisted tail collapses into Lerch/Hurwitz
// blocks over one period.
template <class Real>
EvalResult<Real> eval_euler_sum(const SumSpec<Real>& spec, const PrecisionContext& ctx) {
    spec.validate(ctx);
    long r = spec.order();
    const Cx<Real>& a = spec.shift;
    Cx<Real> inner_sh = spec.inner_shifted() ? a : Cx<Real>{};
    double tol = ctx.target_tol;
    PrecisionContext sub = ctx.with_tol(tol / (8.0 * (r + 2)));

    // inner factor forms (head-independent)
    const int len = 48;
    SeriesBuild<Real> sb{a, len, tol * 1e-10};
    std::vector<detail::InnerFactor<Real>> inner(r);
    for (long j = 0; j < r; ++j) {
        auto& f = inner[j];
        f.twist = spec.xs[j];
        if (spec.ps[j] == 1 && spec.xs[j].is_one()) {
            f.is_harmonic = true;
            // zeta_n(1;1;sh) = psi(n+1+sh) - psi(1+sh)
            f.untwisted = sb.psi_series(Cx<Real>(Real(1)) + inner_sh - a);
            f.untwisted.add_term(0, 0, -digamma(Cx<Real>(Real(1)) + inner_sh, sub));
        } else {
            f.limit = hurwitz_polylog<Real>(spec.ps[j], spec.xs[j], inner_sh, sub);
            f.untwisted = AsymSeries<Real>::constant(f.limit, len);
            // zeta_n = limit - x_j^{n+1} Phi_p(n+1+sh; x_j)
            f.twisted = sb.lerch_series(spec.ps[j], spec.xs[j], Cx<Real>(Real(1)) + inner_sh)
                            .scaled(-spec.xs[j].template embed<Real>());
        }
    }

    // outer factor as a series in u
    AsymSeries<Real> outer(len);
    if (spec.outer_shifted()) {
        outer.add_term(0, spec.q, Cx<Real>(Real(1)));
    } else {
        sb.add_power(outer, 0, Cx<Real>(Real(1)), spec.q, -a, 1, 0);  // n^{-q}
    }

    std::vector<std::vector<Cx<Real>>> cyc;
    for (const auto& xj : spec.xs) cyc.push_back(xj.template power_cycle<Real>());
    auto cycx = spec.x.template power_cycle<Real>();

    long M = std::min<long>(2048, std::max<long>(64, ctx.max_terms));
    double est = 1e300;
    EvalResult<Real> res;
    for (int attempt = 0;; ++attempt) {
        // head
        Cx<Real> head{};
        std::vector<Cx<Real>> P(r);
        for (long n = 1; n <= M; ++n) {
            Cx<Real> inv_a = reciprocal(Cx<Real>(Real(n)) + a);
            Cx<Real> inv_n = Cx<Real>(Real(1) / Real(n));
            const Cx<Real>& inner_inv = spec.inner_shifted() ? inv_a : inv_n;
            for (long j = 0; j < r; ++j)
                P[j] += cyc[j][n % spec.xs[j].order] * pow_int(inner_inv, spec.ps[j]);
            Cx<Real> term = cycx[n % spec.x.order] *
                            pow_int(spec.outer_shifted() ? inv_a : inv_n, spec.q);
            for (long j = 0; j < r; ++j) term *= P[j];
            head += term;
        }

        // tails over subsets of twisted factors
        detail::TableCache<Real> cache{M, a, len - 1, tol * 0.02, {}};
        Cx<Real> tail{};
        double err = 0;
        for (long mask = 0; mask < (1L << r); ++mask) {
            bool skip = false;
            for (long j = 0; j < r; ++j)
                if ((mask >> j & 1) && !inner[j].twisted) skip = true;
            if (skip) continue;
            RootOfUnity w = spec.x;
            AsymSeries<Real> s = outer;
            for (long j = 0; j < r; ++j) {
                if (mask >> j & 1) {
                    w = w * inner[j].twist;
                    s = s * *inner[j].twisted;
                } else {
                    s = s * inner[j].untwisted;
                }
            }
            double e = 0;
            tail += apply_tail(s, cache.get(w, s.max_deg()), e);
            err += e;
        }

        res.value = head + tail;
        res.terms_used = M;
        res.accelerated = true;
        est = err + (r + 2) * sub.target_tol + static_cast<double>(M) * 1e-72;
        res.error_estimate = est;
        if (est <= tol) return res;
        if (2 * M > ctx.max_terms || attempt >= 6) break;
        M *= 2;
    }
    throw precision_error("eval_euler_sum: tolerance not met within max_terms", est);
}

// Multiple Hurwitz polylogarithm evaluator: iterated Euler-sum recursion with
// the innermost indices accumulated as finite sums and the outermost tail
// accelerated through the same block machinery.
template <class Real>
EvalResult<Real> eval_mpl(const MplSpec<Real>& spec, const PrecisionContext& ctx) {
    spec.validate(ctx);
    const Cx<Real>& a = spec.shift;
    long depth = spec.depth();
    double tol = ctx.target_tol;
    PrecisionContext sub = ctx.with_tol(tol / 16.0);

    if (depth == 1) {
        EvalResult<Real> res;
        res.value = hurwitz_polylog<Real>(spec.ks[0], spec.xs[0], a, ctx.with_tol(tol * 0.5));
        res.error_estimate = tol * 0.5;
        res.terms_used = 0;
        res.accelerated = true;
        return res;
    }

    const int len = 48;
    SeriesBuild<Real> sb{a, len, tol * 1e-10};
    long k1 = spec.ks[0], k2 = spec.ks[1];
    RootOfUnity z1 = spec.xs[0], z2 = spec.xs[1];
    bool h1 = (k1 == 1 && z1.is_one());

    // inner-1 form: zeta_{n-1}(k1; z1; a) = U1(n) + z1^n V1(n)
    AsymSeries<Real> U1(len);
    std::optional<AsymSeries<Real>> V1;
    Cx<Real> L1{};
    if (h1) {
        U1 = sb.psi_series(Cx<Real>{});  // psi(n + a)
        U1.add_term(0, 0, -digamma(Cx<Real>(Real(1)) + a, sub));
    } else {
        L1 = hurwitz_polylog<Real>(k1, z1, a, sub);
        U1 = AsymSeries<Real>::constant(L1, len);
        V1 = sb.lerch_series(k1, z1, a).scaled(Cx<Real>(Real(-1)));
    }

    auto cyc1 = z1.template power_cycle<Real>();
    auto cyc2 = z2.template power_cycle<Real>();

    if (depth == 2) {
        long M = std::min<long>(2048, std::max<long>(64, ctx.max_terms));
        double est = 1e300;
        for (int attempt = 0;; ++attempt) {
            Cx<Real> head{};
            Cx<Real> P1{};
            for (long n = 1; n <= M; ++n) {
                Cx<Real> inv = reciprocal(Cx<Real>(Real(n)) + a);
                head += cyc2[n % z2.order] * pow_int(inv, k2) * P1;
                P1 += cyc1[n % z1.order] * pow_int(inv, k1);
            }
            detail::TableCache<Real> cache{M, a, len - 1, tol * 0.02, {}};
            double err = 0;
            Cx<Real> tail{};
            {
                AsymSeries<Real> s = U1.shifted(k2);
                double e = 0;
                tail += apply_tail(s, cache.get(z2, s.max_deg()), e);
                err += e;
            }
            if (V1) {
                AsymSeries<Real> s = V1->shifted(k2);
                double e = 0;
                tail += apply_tail(s, cache.get(z1 * z2, s.max_deg()), e);
                err += e;
            }
            EvalResult<Real> res;
            res.value = head + tail;
            res.terms_used = M;
            res.accelerated = true;
            est = err + sub.target_tol + static_cast<double>(M) * 1e-72;
            res.error_estimate = est;
            if (est <= tol) return res;
            if (2 * M > ctx.max_terms || attempt >= 6) break;
            M *= 2;
        }
        throw precision_error("eval_mpl: tolerance not met within max_terms", est);
    }

    // depth 3
    long k3 = spec.ks[2];
    RootOfUnity z3 = spec.xs[2];
    bool h2 = (k2 == 1 && z2.is_one());
    if (h1 && h2)
        throw unsupported_error("eval_mpl: two leading (1,1) index pairs are not supported");

    auto cyc3 = z3.template power_cycle<Real>();

    // components of A(n-1) = sum_{n2<n} z2^{n2}(n2+a)^{-k2} zeta_{n2-1}(k1;z1;a),
    // each of the form  const | series(n) | w^n * series(n)
    struct Component {
        RootOfUnity w;        // twist (w = 1 for untwisted pieces)
        AsymSeries<Real> s;   // series factor (ln-carrying allowed)
    };
    std::vector<Component> acomp;
    double recursion_err = 0;
    if (!h2) {
        MplSpec<Real> two{{k1, k2}, {z1, z2}, a};
        EvalResult<Real> inner2 = eval_mpl(two, sub);
        recursion_err += inner2.error_estimate;
        acomp.push_back({RootOfUnity::one(), AsymSeries<Real>::constant(inner2.value, len)});
        acomp.push_back({z2, sb.tail_transform(U1.shifted(k2), z2).scaled(Cx<Real>(Real(-1)))});
        if (V1)
            acomp.push_back(
                {z1 * z2, sb.tail_transform(V1->shifted(k2), z1 * z2).scaled(Cx<Real>(Real(-1)))});
    } else {
        // A(n-1) = L1 [psi(n+a) - psi(1+a)] - D_inf + z1^n Z_phi(n)
        SumSpec<Real> dspec;
        dspec.family = Family::S;
        dspec.ps = {1};
        dspec.q = k1;
        dspec.xs = {RootOfUnity::one()};
        dspec.x = z1;
        dspec.shift = a;
        EvalResult<Real> dres = eval_euler_sum(dspec, sub);
        recursion_err += dres.error_estimate;
        AsymSeries<Real> hser = sb.psi_series(Cx<Real>{}).scaled(L1);
        hser.add_term(0, 0, -L1 * digamma(Cx<Real>(Real(1)) + a, sub) - dres.value);
        acomp.push_back({RootOfUnity::one(), std::move(hser)});
        acomp.push_back({z1, sb.tail_transform(V1->scaled(Cx<Real>(Real(-1))).shifted(k2), z1)});
    }

    long M = std::min<long>(4096, std::max<long>(64, ctx.max_terms));
    double est = 1e300;
    for (int attempt = 0;; ++attempt) {
        Cx<Real> head{};
        Cx<Real> A{}, B{};
        for (long n = 1; n <= M; ++n) {
            Cx<Real> inv = reciprocal(Cx<Real>(Real(n)) + a);
            head += cyc3[n % z3.order] * pow_int(inv, k3) * A;
            A += cyc2[n % z2.order] * pow_int(inv, k2) * B;
            B += cyc1[n % z1.order] * pow_int(inv, k1);
        }
        detail::TableCache<Real> cache{M, a, len - 1, tol * 0.02, {}};
        double err = 0;
        Cx<Real> tail{};
        for (const auto& comp : acomp) {
            AsymSeries<Real> s = comp.s.shifted(k3);
            RootOfUnity w = z3 * comp.w;
            double e = 0;
            tail += apply_tail(s, cache.get(w, s.max_deg()), e);
            err += e;
        }
        EvalResult<Real> res;
        res.value = head + tail;
        res.terms_used = M;
        res.accelerated = true;
        est = err + recursion_err + 2 * sub.target_tol + static_cast<double>(M) * 1e-72;
        res.error_estimate = est;
        if (est <= tol) return res;
        if (2 * M > ctx.max_terms || attempt >= 6) break;
        M *= 2;
    }
    throw precision_error("eval_mpl: tolerance not met within max_terms", est);
}

// Direct nested-loop oracle for multiple polylogarithms (test support):
// sums all index tuples with n_r <= cap.
template <class Real>
Cx<Real> eval_mpl_bruteforce(const MplSpec<Real>& spec, long cap) {
    const Cx<Real>& a = spec.shift;
    long depth = spec.depth();
    std::vector<std::vector<Cx<Real>>> cyc;
    for (const auto& xj : spec.xs) cyc.push_back(xj.template power_cycle<Real>());
    Cx<Real> acc{};
    if (depth == 1) {
        for (long n = 1; n <= cap; ++n)
            acc += cyc[0][n % spec.xs[0].order] *
                   pow_int(reciprocal(Cx<Real>(Real(n)) + a), spec.ks[0]);
        return acc;
    }
    if (depth == 2) {
        Cx<Real> P{};
        for (long n = 1; n <= cap; ++n) {
            Cx<Real> inv = reciprocal(Cx<Real>(Real(n)) + a);
            acc += cyc[1][n % spec.xs[1].order] * pow_int(inv, spec.ks[1]) * P;
            P += cyc[0][n % spec.xs[0].order] * pow_int(inv, spec.ks[0]);
        }
        return acc;
    }
    Cx<Real> A{}, B{};
    for (long n = 1; n <= cap; ++n) {
        Cx<Real> inv = reciprocal(Cx<Real>(Real(n)) + a);
        acc += cyc[2][n % spec.xs[2].order] * pow_int(inv, spec.ks[2]) * A;
        A += cyc[1][n % spec.xs[1].order] * pow_int(inv, spec.ks[1]) * B;
        B += cyc[0][n % spec.xs[0].order] * pow_int(inv, spec.ks[0]);
    }
    return acc;
}

}  // namespace hursum

#endif
