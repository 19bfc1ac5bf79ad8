#ifndef HURSUM_ASYMPTOTIC_HPP
#define HURSUM_ASYMPTOTIC_HPP

#include "special_functions.hpp"

#include <utility>
#include <vector>

namespace hursum {

// Truncated asymptotic expansion in u = 1/(n+a) carrying powers of
// ln(n+a):   sum_{d<DMAX} ln(n+a)^d * sum_{t<len} comp[d][t] u^t.
// These describe the large-n tails of inner partial sums; a tail of the
// outer series then reduces to Lerch/Hurwitz values per (d, t) term.
template <class Real>
struct AsymSeries {
    static constexpr int DMAX = 4;
    int len = 0;
    std::array<std::vector<Cx<Real>>, DMAX> comp;

    explicit AsymSeries(int n = 0) : len(n) {}

    bool has_deg(int d) const { return !comp[d].empty(); }
    std::vector<Cx<Real>>& deg(int d) {
        if (comp[d].empty()) comp[d].assign(len, Cx<Real>{});
        return comp[d];
    }
    int max_deg() const {
        int m = -1;
        for (int d = 0; d < DMAX; ++d)
            if (has_deg(d)) m = d;
        return m;
    }
    void add_term(int d, long t, const Cx<Real>& c) {
        if (t < 0) throw domain_error("AsymSeries: negative exponent");
        if (t >= len) return;  // beyond the truncation window
        deg(d)[t] += c;
    }
    AsymSeries& operator+=(const AsymSeries& o) {
        for (int d = 0; d < DMAX; ++d) {
            if (!o.has_deg(d)) continue;
            auto& mine = deg(d);
            for (int t = 0; t < len && t < o.len; ++t) mine[t] += o.comp[d][t];
        }
        return *this;
    }
    AsymSeries scaled(const Cx<Real>& f) const {
        AsymSeries r(len);
        for (int d = 0; d < DMAX; ++d) {
            if (!has_deg(d)) continue;
            auto& rd = r.deg(d);
            for (int t = 0; t < len; ++t) rd[t] = comp[d][t] * f;
        }
        return r;
    }
    // multiply by u^q
    AsymSeries shifted(long q) const {
        AsymSeries r(len);
        for (int d = 0; d < DMAX; ++d) {
            if (!has_deg(d)) continue;
            auto& rd = r.deg(d);
            for (int t = 0; t + q < len; ++t) rd[t + q] = comp[d][t];
        }
        return r;
    }
    // true when only the u^0 ln^0 coefficient may be nonzero
    bool is_constant() const {
        for (int d = 1; d < DMAX; ++d)
            if (has_deg(d)) {
                for (const auto& c : comp[d])
                    if (c.re != 0 || c.im != 0) return false;
            }
        if (!has_deg(0)) return true;
        for (int t = 1; t < len; ++t)
            if (comp[0][t].re != 0 || comp[0][t].im != 0) return false;
        return true;
    }
    friend AsymSeries operator*(const AsymSeries& a, const AsymSeries& b) {
        if (a.is_constant()) return b.scaled(a.has_deg(0) ? a.comp[0][0] : Cx<Real>{});
        if (b.is_constant()) return a.scaled(b.has_deg(0) ? b.comp[0][0] : Cx<Real>{});
        AsymSeries r(std::min(a.len, b.len));
        for (int da = 0; da < DMAX; ++da) {
            if (!a.has_deg(da)) continue;
            for (int db = 0; db + da < DMAX; ++db) {
                if (!b.has_deg(db)) continue;
                auto& rd = r.deg(da + db);
                for (int ta = 0; ta < r.len; ++ta) {
                    const Cx<Real>& ca = a.comp[da][ta];
                    if (ca.re == 0 && ca.im == 0) continue;
                    for (int tb = 0; ta + tb < r.len; ++tb) rd[ta + tb] += ca * b.comp[db][tb];
                }
            }
        }
        for (int da = 0; da < DMAX; ++da)
            for (int db = 0; db < DMAX; ++db)
                if (da + db >= DMAX && a.has_deg(da) && b.has_deg(db))
                    throw unsupported_error("AsymSeries: ln-degree overflow in product");
        return r;
    }
    static AsymSeries constant(const Cx<Real>& c, int len) {
        AsymSeries r(len);
        r.add_term(0, 0, c);
        return r;
    }
    // diagnostic evaluation at a concrete n (u = 1/(n+a))
    Cx<Real> eval_at(const Cx<Real>& n_plus_a) const {
        Cx<Real> u = reciprocal(n_plus_a);
        Cx<Real> L = log(n_plus_a);
        Cx<Real> total{};
        for (int d = 0; d < DMAX; ++d) {
            if (!has_deg(d)) continue;
            Cx<Real> horner{};
            for (int t = len - 1; t >= 0; --t) horner = horner * u + comp[d][t];
            total += horner * pow_int(L, d);
        }
        return total;
    }
};

// Build context for the series algebra: expansion center a (u = 1/(n+a)),
// truncation length, and the tolerance the Euler-Maclaurin pieces aim for.
template <class Real>
struct SeriesBuild {
    Cx<Real> a;
    int len = 48;
    double tol = 1e-45;

    AsymSeries<Real> make() const { return AsymSeries<Real>(len); }

    // coef * N^{e - nsub} * u^e * (1 + delta u)^{-e} added at ln-degree d
    void add_power(AsymSeries<Real>& s, int d, Cx<Real> coef, long e, const Cx<Real>& delta,
                   long Nscale, long nsub) const {
        Cx<Real> c = coef;
        if (Nscale != 1) {
            Real nr(Nscale);
            long k = e - nsub;
            if (k >= 0)
                c = c * Cx<Real>(mp::pow(nr, static_cast<unsigned>(k)));
            else
                c = c / Cx<Real>(mp::pow(nr, static_cast<unsigned>(-k)));
        }
        // binomial expansion (1+delta u)^{-e}
        Cx<Real> b = c;
        for (long m = 0; e + m < len; ++m) {
            s.add_term(d, e + m, b);
            b = b * delta * (Real(-(double)(e + m)) / Real((double)(m + 1)));
        }
    }

    // ln(1 + delta u) as a pure u-series
    AsymSeries<Real> log1p_series(const Cx<Real>& delta) const {
        AsymSeries<Real> s = make();
        Cx<Real> p = delta;
        for (int m = 1; m < len; ++m) {
            s.add_term(0, m, p * (Real(m % 2 ? 1 : -1) / Real(m)));
            p = p * delta;
        }
        return s;
    }

    // psi((n+a) + delta) = ln(n+a) + ln(1+delta u) - (1/2)T^{-1}
    //                      - sum_i B_{2i}/(2i) T^{-2i},  T = (n+a)+delta
    AsymSeries<Real> psi_series(const Cx<Real>& delta) const {
        AsymSeries<Real> s = make();
        s.add_term(1, 0, Cx<Real>(Real(1)));
        s += log1p_series(delta);
        add_power(s, 0, Cx<Real>(Real(-1) / 2), 1, delta, 1, 0);
        for (long i = 1; 2 * i < len; ++i)
            add_power(s, 0, Cx<Real>(-bernoulli_real_2n<Real>(i) / Real(2 * i)), 2 * i, delta, 1,
                      0);
        return s;
    }

    // zeta_H(p, (n+a)+delta) for p >= 2 via the Euler-Maclaurin expansion
    AsymSeries<Real> zeta_series(long p, const Cx<Real>& delta) const {
        if (p < 2) throw domain_error("zeta_series: p must be >= 2");
        AsymSeries<Real> s = make();
        add_power(s, 0, Cx<Real>(Real(1) / Real(p - 1)), p - 1, delta, 1, 0);
        add_power(s, 0, Cx<Real>(Real(1) / 2), p, delta, 1, 0);
        // (p)_{2i-1} and (2i)! maintained incrementally
        Real poch(p), fact(2);
        for (long i = 1; p - 1 + 2 * i < len; ++i) {
            if (i > 1) {
                poch *= Real(p + 2 * i - 3) * Real(p + 2 * i - 2);
                fact *= Real(2 * i - 1) * Real(2 * i);
            }
            add_power(s, 0, Cx<Real>(bernoulli_real_2n<Real>(i) * poch / fact), p - 1 + 2 * i,
                      delta, 1, 0);
        }
        return s;
    }

    // Series of sum_{k>=0} w^k ln^d(k + n + dshift) (k + n + dshift)^{-sigma}
    // in u = 1/(n+a), via period blocks of w and the Euler-Maclaurin
    // expansion of the zeta jets. sigma = 1 demands w != 1 (the simple poles
    // cancel across a period, as do the j-independent ln(n+a) pieces).
    AsymSeries<Real> block_sum_series(long sigma, int d, const RootOfUnity& w,
                                      const Cx<Real>& dshift) const {
        if (sigma < 1) throw domain_error("block_sum_series: sigma must be >= 1");
        if (sigma == 1 && w.is_one())
            throw divergence_error("block_sum_series: (sigma, w) = (1, 1) diverges");
        if (d > 2) throw unsupported_error("block_sum_series: ln-degree capped at 2");
        long N = w.order;
        auto cyc = w.template power_cycle<Real>();
        AsymSeries<Real> s = make();

        // factorials for the (-Ltilde)^j / j! pieces
        auto inv_fact = [](int j) {
            Real f(1);
            for (int i = 2; i <= j; ++i) f *= i;
            return Real(1) / f;
        };

        for (long j0 = 0; j0 < N; ++j0) {
            Cx<Real> delta = dshift - a + Cx<Real>(Real(j0));
            Cx<Real> wj = cyc[j0 % N];
            // powers of G = ln(1 + delta u): Ltilde = ln(n+a) + G
            std::array<AsymSeries<Real>, 4> Gp;  // G^0..G^3
            Gp[0] = AsymSeries<Real>::constant(Cx<Real>(Real(1)), len);
            Gp[1] = log1p_series(delta);
            for (int k = 2; k <= d + 1; ++k) Gp[k] = Gp[k - 1] * Gp[1];

            // expand c * (-Ltilde)^jj / jj! into ln-degree components and
            // multiply by N^{e - sigma} u^e (1+delta u)^{-e}
            auto emit = [&](const Cx<Real>& c, int jj, long e) {
                Real sgn = (jj % 2 == 0) ? Real(1) : Real(-1);
                Cx<Real> base = c * (sgn * inv_fact(jj));
                // (-1)^jj (l + G)^jj = sum_i binom(jj,i) l^i G^{jj-i}
                long binom = 1;
                for (int i = 0; i <= jj; ++i) {
                    if (i > 0) binom = binom * (jj - i + 1) / i;
                    AsymSeries<Real> piece = make();
                    add_power(piece, 0, base * Real(binom), e, delta, N, sigma);
                    piece = piece * Gp[jj - i];
                    for (int dd = 0; dd + i < AsymSeries<Real>::DMAX; ++dd) {
                        if (!piece.has_deg(dd)) continue;
                        auto& target = s.deg(dd + i);
                        for (int t = 0; t < len; ++t) target[t] += piece.comp[dd][t] * wj;
                    }
                }
            };

            if (sigma == 1) {
                // N^{-1-eps} t^{-eps}/eps = N^{-1} e^{-eps Ltilde}/eps:
                // eps^d coefficient is N^{-1} (-Ltilde)^{d+1}/(d+1)!
                // (the pole itself cancels over the period)
                emit(Cx<Real>(Real(1)), d + 1, 0);
            } else {
                // t^{1-sigma}/(sigma-1+eps): eps^d coeff pairs the geometric
                // expansion of 1/(sigma-1+eps) with the exponential jet
                for (int k = 0; k <= d; ++k) {
                    Real geo = Real(k % 2 == 0 ? 1 : -1) /
                               mp::pow(Real(sigma - 1), static_cast<unsigned>(k + 1));
                    emit(Cx<Real>(geo), d - k, sigma - 1);
                }
            }
            // t^{-sigma}/2
            emit(Cx<Real>(Real(1) / 2), d, sigma);
            // Bernoulli terms with Pochhammer (sigma+eps)_{2i-1}
            std::array<Real, 3> poch{Real(1), Real(0), Real(0)};  // eps-poly coeffs
            Real fact(1);
            for (long i = 1; sigma - 1 + 2 * i < len; ++i) {
                for (long add = 2 * (i - 1) - 1 < 0 ? 0 : 2 * (i - 1) - 1; add <= 2 * i - 2;
                     ++add) {
                    // multiply poly by (sigma + add + eps)
                    std::array<Real, 3> np{};
                    for (int k = 0; k < 3; ++k) {
                        np[k] += poch[k] * Real(sigma + add);
                        if (k + 1 < 3) np[k + 1] += poch[k];
                    }
                    poch = np;
                }
                fact *= Real(2 * i - 1) * Real(2 * i);
                Real bc = bernoulli_real_2n<Real>(i) / fact;
                for (int k = 0; k <= d && k < 3; ++k)
                    if (poch[k] != 0) emit(Cx<Real>(bc * poch[k]), d - k, sigma - 1 + 2 * i);
            }
        }
        // the emission yields the eps^d jet coefficient; the log-weighted sum
        // is (-1)^d d! times that
        if (d > 0) {
            Real f(d == 1 ? -1 : 2);
            s = s.scaled(Cx<Real>(f));
        }
        // the j-independent u^0 pieces cancel over the period; snap residue
        for (int dd = 0; dd < AsymSeries<Real>::DMAX; ++dd)
            if (s.has_deg(dd)) s.comp[dd][0] = Cx<Real>{};
        return s;
    }

    // Phi_p(n + dshift; y) = sum_{k>=0} y^k/(k + n + dshift)^p as a series in
    // u. y = 1 requires p >= 2; y != 1 admits p = 1.
    AsymSeries<Real> lerch_series(long p, const RootOfUnity& y, const Cx<Real>& dshift) const {
        return block_sum_series(p, 0, y, dshift);
    }

    // Tail transform: series S(n) = sum_{d,t} c_{d,t} ln^d(n+a) u^t becomes
    // Z(n) with sum_{m>=n} w^m S(m) = w^n Z(n); here sum_{j>=0} w^j S(n+j)
    // reduces per (d,t) term to a block sum at dshift = a.
    AsymSeries<Real> tail_transform(const AsymSeries<Real>& s, const RootOfUnity& w) const {
        AsymSeries<Real> out = make();
        double scale = 0;
        for (int d = 0; d < AsymSeries<Real>::DMAX; ++d)
            if (s.has_deg(d))
                for (int t = 0; t < s.len; ++t) scale = std::max(scale, abs_d(s.comp[d][t]));
        for (int d = 0; d < AsymSeries<Real>::DMAX; ++d) {
            if (!s.has_deg(d)) continue;
            for (int t = 0; t < s.len; ++t) {
                const Cx<Real>& c = s.comp[d][t];
                if (abs_d(c) <= scale * 1e-40) continue;
                if (t == 0) throw divergence_error("tail_transform: u^0 mass");
                out += block_sum_series(t, d, w, a).scaled(c);
            }
        }
        return out;
    }
};

// Lambda_d(sigma) = sum_{n>M} w^n ln^d(n+a) (n+a)^{-sigma} for every sigma in
// [1, sigma_max] and d in [0, dmax], assembled from Hurwitz-zeta jets over one
// period of w. With w = 1 the sigma = 1 column is divergent and stays unset.
template <class Real>
struct TailTable {
    long sigma_max = 0;
    int dmax = 0;
    std::vector<std::array<Cx<Real>, AsymSeries<Real>::DMAX>> lam;  // [sigma-1]
    double err = 0;

    const Cx<Real>& get(long sigma, int d) const {
        if (sigma < 1 || sigma > sigma_max || d > dmax)
            throw domain_error("TailTable: index out of range");
        return lam[sigma - 1][d];
    }
};

template <class Real>
TailTable<Real> build_tail_table(const RootOfUnity& w, long M, const Cx<Real>& a, long sigma_max,
                                 int dmax, double tol) {
    TailTable<Real> table;
    table.sigma_max = sigma_max;
    table.dmax = dmax;
    table.lam.assign(sigma_max, {});
    long N = w.order;
    auto cyc = w.template power_cycle<Real>();
    Cx<Real> c = Cx<Real>(Real(M + 1)) + a;
    Cx<Real> wM1 = cyc[(M + 1) % N];
    Real rN(N);
    Cx<Real> logN = N == 1 ? Cx<Real>{} : Cx<Real>(mp::log(rN));
    double toler = tol / (2.0 * N);

    for (long sigma = 1; sigma <= sigma_max; ++sigma) {
        if (sigma == 1 && w.is_one())
            continue;  // divergent; callers must not request it
        Jet<Real> total;
        double err_acc = 0;
        for (long j = 0; j < N; ++j) {
            Cx<Real> t = (Cx<Real>(Real(j)) + c) / rN;
            double e = 0;
            Jet<Real> zj = hurwitz_zeta_jet<Real>(sigma, t, dmax, toler, &e);
            err_acc += e;
            total += zj.scaled(cyc[j % N]);
        }
        // fold N^{-sigma - eps}
        Cx<Real> nscale = pow_int(reciprocal(Cx<Real>(rN)), sigma);
        Jet<Real> nj = power_jet(nscale, logN, dmax);
        if (w.is_one()) {
            if (abs_d(total.pole) > 0) throw divergence_error("tail table: pole with w = 1");
        } else {
            // the simple poles at sigma = 1 cancel over the period
            total.pole = Cx<Real>{};
        }
        Jet<Real> folded = total * nj;
        Real dfac(1);
        for (int d = 0; d <= dmax; ++d) {
            if (d > 0) dfac *= Real(d);
            Cx<Real> v = folded.c[d] * dfac;
            if (d % 2 == 1) v = -v;
            table.lam[sigma - 1][d] = wM1 * v;
        }
        table.err = std::max(table.err, err_acc);
    }
    return table;
}

// value of sum_{n>M} w^n S(n) given the Lambda table for w; err_out receives
// a truncation estimate from the last retained exponents
template <class Real>
Cx<Real> apply_tail(const AsymSeries<Real>& s, const TailTable<Real>& table, double& err_out) {
    Cx<Real> acc{};
    double err = 0;
    double scale = 0;
    for (int d = 0; d < AsymSeries<Real>::DMAX; ++d)
        if (s.has_deg(d))
            for (long t = 0; t < s.len; ++t) scale = std::max(scale, abs_d(s.comp[d][t]));
    for (int d = 0; d < AsymSeries<Real>::DMAX; ++d) {
        if (!s.has_deg(d)) continue;
        for (long t = 1; t < s.len; ++t) {
            const Cx<Real>& coef = s.comp[d][t];
            if (coef.re == 0 && coef.im == 0) continue;
            acc += coef * table.get(t, d);
        }
        // a genuine constant term would make the tail divergent; tolerate
        // only the cancellation residue of exact-zero combinations
        if (abs_d(s.comp[d][0]) > scale * 1e-38)
            throw divergence_error("apply_tail: nonzero u^0 coefficient");
        // truncation estimate: magnitude of the last two retained terms
        for (long t = std::max(1, s.len - 2); t < s.len; ++t)
            err += abs_d(s.comp[d][t]) * abs_d(table.get(t, d));
    }
    err_out = err * 8 + table.err;
    return acc;
}

}  // namespace hursum

#endif
