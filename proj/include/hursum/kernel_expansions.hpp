#ifndef HURSUM_KERNEL_EXPANSIONS_HPP
#define HURSUM_KERNEL_EXPANSIONS_HPP

#include "identities.hpp"

namespace hursum {

// The series expansions certified by near-pole sampling. Cases are keyed by
// the argument pattern (s vs s+a) and the center lattice rather than by the
// display numbering, since two lemmas share their label text.
enum class LemmaCase {
    L22Neg,  // phi-deriv of (s;x) around s = -n, n >= 0 (singular part x^n/(s+n)^p)
    L22Pos,  // phi-deriv of (s;x) around s = +n, n >= 1 (regular)
    L23,     // Phi(s;x) around any integer n (simple pole x^{-n}/(s-n))
    L24Neg,  // phi-deriv of (s+a;x) around s = -n, n >= 0 (regular)
    L24Pos,  // phi-deriv of (s+a;x) around s = +n, n >= 1 (regular)
    L25,     // Phi(s;x) around s = -n-a, n >= 0 (regular)
    L26,     // phi-deriv of (s;x) around s = -a (regular)
};

inline const char* lemma_name(LemmaCase l) {
    switch (l) {
        case LemmaCase::L22Neg: return "L2.2-neg";
        case LemmaCase::L22Pos: return "L2.2-pos";
        case LemmaCase::L23: return "L2.3";
        case LemmaCase::L24Neg: return "L2.4-neg";
        case LemmaCase::L24Pos: return "L2.4-pos";
        case LemmaCase::L25: return "L2.5";
        case LemmaCase::L26: return "L2.6";
    }
    return "?";
}

template <class Real>
struct ExpansionCase {
    LemmaCase lemma = LemmaCase::L23;
    long p = 1;      // derivative order parameter (phi cases only)
    RootOfUnity x;   // series argument
    Cx<Real> a{};    // shift (L2.4/L2.5/L2.6)
    long n = 0;      // lattice index of the center
    long K = 4;      // truncation order

    Cx<Real> center() const {
        switch (lemma) {
            case LemmaCase::L22Neg:
            case LemmaCase::L24Neg: return Cx<Real>(Real(-n));
            case LemmaCase::L22Pos:
            case LemmaCase::L24Pos: return Cx<Real>(Real(n));
            case LemmaCase::L23: return Cx<Real>(Real(n));
            case LemmaCase::L25: return -(Cx<Real>(Real(n)) + a);
            case LemmaCase::L26: return -a;
        }
        return {};
    }

    void validate() const {
        switch (lemma) {
            case LemmaCase::L22Neg:
                if (n < 0 || x.is_one()) throw spec_error("L2.2-neg needs n >= 0, x != 1");
                break;
            case LemmaCase::L22Pos:
                if (n < 1 || x.is_one()) throw spec_error("L2.2-pos needs n >= 1, x != 1");
                break;
            case LemmaCase::L23: break;
            case LemmaCase::L24Neg:
                if (n < 0 || x.is_one()) throw spec_error("L2.4-neg needs n >= 0, x != 1");
                break;
            case LemmaCase::L24Pos:
                if (n < 1 || x.is_one()) throw spec_error("L2.4-pos needs n >= 1, x != 1");
                break;
            case LemmaCase::L25:
                if (n < 0) throw spec_error("L2.5 needs n >= 0");
                break;
            case LemmaCase::L26:
                if (x.is_one()) throw spec_error("L2.6 needs x != 1");
                break;
        }
        if (p < 1) throw spec_error("expansion case: p must be >= 1");
        if (K < 0) throw spec_error("expansion case: K must be nonnegative");
    }

    std::string str() const {
        std::ostringstream os;
        os << lemma_name(lemma) << " p=" << p << " x=" << x.str() << " n=" << n << " K=" << K;
        return os.str();
    }
};

namespace kernel_detail {

template <class Real>
Cx<Real> binomc(long n, long k) {
    return Cx<Real>(to_real<Real>(identity_detail::binom(n, k)));
}

// paper-label Hurwitz polylog value: Li_m(z; c) with denominator shift c-1
template <class Real>
Cx<Real> hli_lbl(long m, const RootOfUnity& z, const Cx<Real>& label,
                 const PrecisionContext& ctx) {
    return hurwitz_polylog<Real>(m, z, label - Cx<Real>(Real(1)), ctx);
}

}  // namespace kernel_detail

// |direct - truncated expansion| at a sample point s inside the case's disc.
// The singular term (when the lemma has one) is included exactly, so the
// residual measures the truncated regular part only: O(|s-center|^{K+1}).
template <class Real>
Real expansion_residual(const ExpansionCase<Real>& cs, const Cx<Real>& s,
                        const PrecisionContext& ctx) {
    using kernel_detail::binomc;
    using kernel_detail::hli_lbl;
    cs.validate();
    Cx<Real> dz = s - cs.center();
    if (abs_d(dz) > 0.26) throw spec_error("expansion_residual: sample outside the disc");
    if (abs_d(dz) < ctx.pole_guard) throw spec_error("expansion_residual: sample on the center");
    PrecisionContext cctx = ctx.with_tol(ctx.target_tol * 0.1);
    const RootOfUnity& x = cs.x;
    long p = cs.p, n = cs.n, K = cs.K;
    Cx<Real> direct{}, trunc{};
    switch (cs.lemma) {
        case LemmaCase::L22Neg: {
            direct = lerch_phi_deriv<Real>(p, s, x, cctx);
            Cx<Real> xn = pow_int(x.template embed<Real>(), n);
            trunc = xn * pow_int(reciprocal(dz), p);
            for (long k = 0; k <= K; ++k) {
                Cx<Real> coef = binomc<Real>(k + p - 1, p - 1) *
                                (polylog<Real>(k + p, x, cctx) * Real(k % 2 == 0 ? 1 : -1) +
                                 finite_sum<Real>(n, k + p, x.inverse(), Cx<Real>{}) *
                                     Real(p % 2 == 0 ? 1 : -1));
                trunc += xn * coef * pow_int(dz, k);
            }
            break;
        }
        case LemmaCase::L22Pos: {
            direct = lerch_phi_deriv<Real>(p, s, x, cctx);
            Cx<Real> xmn = pow_int(x.template embed<Real>(), -n);
            for (long k = 0; k <= K; ++k) {
                Cx<Real> coef = binomc<Real>(k + p - 1, p - 1) * Real(k % 2 == 0 ? 1 : -1) *
                                (polylog<Real>(k + p, x, cctx) -
                                 finite_sum<Real>(n - 1, k + p, x, Cx<Real>{}));
                trunc += xmn * coef * pow_int(dz, k);
            }
            break;
        }
        case LemmaCase::L23: {
            direct = ext_trig<Real>(s, x, cctx);
            Cx<Real> xmn = pow_int(x.template embed<Real>(), -n);
            trunc = xmn * reciprocal(dz);
            for (long m = 0; m <= K; ++m) {
                Cx<Real> coef{};
                if (x.is_one()) {
                    // (-1)^m Li - Li cancels termwise for even m
                    if (m % 2 == 1) coef = polylog<Real>(m + 1, x, cctx) * Real(-2);
                } else {
                    coef = polylog<Real>(m + 1, x, cctx) * Real(m % 2 == 0 ? 1 : -1) -
                           polylog<Real>(m + 1, x.inverse(), cctx);
                }
                trunc += xmn * coef * pow_int(dz, m);
            }
            break;
        }
        case LemmaCase::L24Neg: {
            direct = lerch_phi_deriv<Real>(p, s + cs.a, x, cctx);
            Cx<Real> xn = pow_int(x.template embed<Real>(), n);
            Cx<Real> xinv = x.inverse().template embed<Real>();
            for (long k = 0; k <= K; ++k) {
                Cx<Real> coef =
                    binomc<Real>(k + p - 1, p - 1) *
                    (hli_lbl<Real>(k + p, x, cs.a, cctx) * xinv * Real(k % 2 == 0 ? 1 : -1) +
                     finite_sum<Real>(n, k + p, x.inverse(), -cs.a) * Real(p % 2 == 0 ? 1 : -1));
                trunc += xn * coef * pow_int(dz, k);
            }
            break;
        }
        case LemmaCase::L24Pos: {
            direct = lerch_phi_deriv<Real>(p, s + cs.a, x, cctx);
            Cx<Real> pref = pow_int(x.template embed<Real>(), -n - 1);
            for (long k = 0; k <= K; ++k) {
                Cx<Real> coef = binomc<Real>(k + p - 1, p - 1) * Real(k % 2 == 0 ? 1 : -1) *
                                (hli_lbl<Real>(k + p, x, cs.a, cctx) -
                                 finite_sum<Real>(n, k + p, x, cs.a - Cx<Real>(Real(1))));
                trunc += pref * coef * pow_int(dz, k);
            }
            break;
        }
        case LemmaCase::L25: {
            direct = ext_trig<Real>(s, x, cctx);
            Cx<Real> xn = pow_int(x.template embed<Real>(), n);
            Cx<Real> xe = x.template embed<Real>();
            for (long m = 0; m <= K; ++m) {
                Cx<Real> coef =
                    hli_lbl<Real>(m + 1, x, Cx<Real>(Real(1)) - cs.a, cctx) *
                        Real(m % 2 == 0 ? 1 : -1) -
                    xe * hli_lbl<Real>(m + 1, x.inverse(), cs.a, cctx);
                trunc += xn * coef * pow_int(dz, m);
            }
            break;
        }
        case LemmaCase::L26: {
            direct = lerch_phi_deriv<Real>(p, s, x, cctx);
            Cx<Real> xinv = x.inverse().template embed<Real>();
            for (long k = 0; k <= K; ++k) {
                Cx<Real> coef = binomc<Real>(k + p - 1, p - 1) * Real(k % 2 == 0 ? 1 : -1) *
                                hli_lbl<Real>(k + p, x, -cs.a, cctx) * xinv;
                trunc += coef * pow_int(dz, k);
            }
            break;
        }
    }
    return abs(direct - trunc);
}

// Least-squares slope of log(residual) against log(eps). The residual at
// radius eps is taken as the max over four sample directions, a discrete
// stand-in for the sup over the circle |s - center| = eps; a single ray can
// sit near a phase cancellation of the next coefficient and flatten the fit.
template <class Real>
double expansion_slope(const ExpansionCase<Real>& cs, const PrecisionContext& ctx,
                       const std::vector<double>& eps = {0.2, 0.1, 0.05}) {
    std::vector<Cx<Real>> dirs;
    for (int j = 0; j < 4; ++j)
        dirs.push_back(exp(Cx<Real>(Real(0), Real("0.37") + pi_v<Real>() * Real(j) / 2)));
    std::vector<double> lx, ly;
    for (double e : eps) {
        double rv = 0;
        for (const auto& dir : dirs) {
            Cx<Real> s = cs.center() + dir * Real(e);
            rv = std::max(rv, static_cast<double>(expansion_residual(cs, s, ctx)));
        }
        lx.push_back(std::log(e));
        ly.push_back(std::log(std::max(rv, 1e-290)));
    }
    double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// the default certification grid: p <= 3, argument orders <= 4, K in {2,4,6}
template <class Real>
std::vector<ExpansionCase<Real>> default_expansion_grid(const Cx<Real>& a) {
    std::vector<ExpansionCase<Real>> grid;
    std::vector<RootOfUnity> xs = {RootOfUnity(2, 1), RootOfUnity(3, 1), RootOfUnity(4, 1)};
    std::vector<long> Ks = {2, 4, 6};
    for (long K : Ks) {
        for (const auto& x : xs) {
            for (long p : {1L, 2L, 3L}) {
                for (long n : {0L, 2L}) grid.push_back({LemmaCase::L22Neg, p, x, a, n, K});
                for (long n : {1L, 3L}) grid.push_back({LemmaCase::L22Pos, p, x, a, n, K});
                for (long n : {0L, 1L}) grid.push_back({LemmaCase::L24Neg, p, x, a, n, K});
                for (long n : {1L, 2L}) grid.push_back({LemmaCase::L24Pos, p, x, a, n, K});
                grid.push_back({LemmaCase::L26, p, x, a, 0, K});
            }
            for (long n : {-1L, 0L, 2L}) grid.push_back({LemmaCase::L23, 1, x, a, n, K});
            for (long n : {0L, 1L}) grid.push_back({LemmaCase::L25, 1, x, a, n, K});
        }
        grid.push_back({LemmaCase::L23, 1, RootOfUnity::one(), a, 1, K});
    }
    return grid;
}

// ---- residue bookkeeping of the contour lemma ----

// Closed-form residues of F^{(a)}_{p,q}(x,y;s) =
//   Phi(s;x) phi^{(p-1)}(s+a;y) (-1)^{p-1} / ((p-1)! (s+a)^q)
// summed over every pole inside the square |Re s|,|Im s| <= L. The total
// over all poles is zero; the partial sum must shrink as the square grows.
template <class Real>
Cx<Real> residue_sum_check(long p, long q, const RootOfUnity& x, const RootOfUnity& y,
                           const Cx<Real>& a, long m, const PrecisionContext& ctx) {
    if (m < 3) throw spec_error("residue_sum_check: m must be >= 3");
    if (p == 1 && y.is_one()) throw spec_error("residue_sum_check: (p,y) = (1,1)");
    using kernel_detail::binomc;
    using kernel_detail::hli_lbl;
    PrecisionContext cctx = ctx.with_tol(std::min(ctx.target_tol, 1e-24));

    double L = static_cast<double>(m) + 0.5;
    double rea = static_cast<double>(a.re), ima = static_cast<double>(a.im);
    for (int attempt = 0;; ++attempt) {
        // degenerate contour: a pole family member on the boundary
        bool degenerate = false;
        for (long n = 0; n <= m + 2 && !degenerate; ++n) {
            double d1 = std::max(std::abs(-double(n) - rea), std::abs(ima));  // -n-a
            if (std::abs(d1 - L) < 1e-9) degenerate = true;
        }
        if (std::abs(std::abs(rea) - L) < 1e-9) degenerate = true;
        if (!degenerate) break;
        if (attempt >= 2) throw spec_error("residue_sum_check: contour retry failed");
        L += 0.25;
    }

    Cx<Real> xe = x.template embed<Real>(), ye = y.template embed<Real>();
    Cx<Real> xye = xe * ye;
    RootOfUnity xy = x * y;
    Cx<Real> Lp_y_a = hli_lbl<Real>(p, y, a, cctx);  // Li_p(y;a)
    int sq = q % 2 == 0 ? 1 : -1;

    Cx<Real> total{};
    // integer poles n >= 0 (simple, from Phi)
    long nmax = static_cast<long>(std::floor(L));
    for (long n = 0; n <= nmax; ++n) {
        Cx<Real> num = pow_int(xe, -n) * pow_int(ye, -n - 1);
        Cx<Real> dz = pow_int(reciprocal(Cx<Real>(Real(n)) + a), q);
        total += num * dz * (Lp_y_a - finite_sum<Real>(n, p, y, a - Cx<Real>(Real(1))));
    }
    // integer poles -n, n >= 1
    for (long n = 1; n <= nmax; ++n) {
        Cx<Real> num = pow_int(xye, n) * pow_int(reciprocal(Cx<Real>(Real(n)) - a), q);
        Cx<Real> br = Lp_y_a * reciprocal(ye) +
                      finite_sum<Real>(n, p, y.inverse(), -a) * Real(p % 2 == 0 ? 1 : -1);
        total += num * br * Real(sq);
    }
    // poles -n-a, n >= 1, order p
    std::vector<Cx<Real>> beta(p);
    for (long mm = 0; mm < p; ++mm)
        beta[mm] = hli_lbl<Real>(mm + 1, x, Cx<Real>(Real(1)) - a, cctx) *
                       Real(mm % 2 == 0 ? 1 : -1) -
                   xe * hli_lbl<Real>(mm + 1, x.inverse(), a, cctx);
    for (long n = 1;; ++n) {
        if (std::max(std::abs(-double(n) - rea), std::abs(ima)) > L) break;
        Cx<Real> acc{};
        for (long mm = 0; mm < p; ++mm)
            acc += binomc<Real>(p + q - mm - 2, q - 1) * beta[mm] *
                   pow_int(Cx<Real>(Real(1) / Real(n)), p + q - mm - 1);
        total += acc * pow_int(xye, n) * Real(sq);
    }
    // pole -a of order p+q
    if (std::max(std::abs(rea), std::abs(ima)) < L) {
        Cx<Real> acc = hli_lbl<Real>(p + q, x, Cx<Real>(Real(1)) - a, cctx) *
                           Real((p + q) % 2 == 0 ? -1 : 1) -
                       xe * hli_lbl<Real>(p + q, x.inverse(), a, cctx);
        for (long mm = 0; mm <= q - 1; ++mm) {
            long k = q - 1 - mm;
            acc += binomc<Real>(k + p - 1, p - 1) * Real(k % 2 == 0 ? 1 : -1) *
                   polylog<Real>(k + p, y, cctx) * beta[mm];
        }
        total += acc;
    }
    return total;
}

// numeric residue of F at a simple integer pole via two-step Richardson
// extrapolation of eps * F(n0 + eps)
template <class Real>
Cx<Real> numeric_integer_residue(long p, long q, const RootOfUnity& x, const RootOfUnity& y,
                                 const Cx<Real>& a, long n0, const PrecisionContext& ctx) {
    auto F = [&](const Cx<Real>& s) {
        return ext_trig<Real>(s, x, ctx) * lerch_phi_deriv<Real>(p, s + a, y, ctx) *
               pow_int(reciprocal(s + a), q);
    };
    auto g = [&](double e) {
        Cx<Real> eps{Real(e)};
        return F(Cx<Real>(Real(n0)) + eps) * eps;
    };
    // small base step: the nearby -a pole inflates the Taylor coefficients
    double e0 = 3e-4;
    Cx<Real> g0 = g(e0), g1 = g(e0 / 2), g2 = g(e0 / 4);
    Cx<Real> r1 = g1 * Real(2) - g0;
    Cx<Real> r2 = g2 * Real(2) - g1;
    return (r2 * Real(4) - r1) / Real(3);
}

// the printed closed form for the same residue
template <class Real>
Cx<Real> closed_form_integer_residue(long p, long q, const RootOfUnity& x, const RootOfUnity& y,
                                     const Cx<Real>& a, long n0, const PrecisionContext& ctx) {
    using kernel_detail::hli_lbl;
    Cx<Real> xe = x.template embed<Real>(), ye = y.template embed<Real>();
    Cx<Real> Lp = hli_lbl<Real>(p, y, a, ctx);
    if (n0 >= 0) {
        return pow_int(xe, -n0) * pow_int(ye, -n0 - 1) *
               pow_int(reciprocal(Cx<Real>(Real(n0)) + a), q) *
               (Lp - finite_sum<Real>(n0, p, y, a - Cx<Real>(Real(1))));
    }
    long n = -n0;
    return pow_int(xe * ye, n) * pow_int(reciprocal(Cx<Real>(Real(n)) - a), q) *
           Real(q % 2 == 0 ? 1 : -1) *
           (Lp * reciprocal(ye) +
            finite_sum<Real>(n, p, y.inverse(), -a) * Real(p % 2 == 0 ? 1 : -1));
}

}  // namespace hursum

#endif
