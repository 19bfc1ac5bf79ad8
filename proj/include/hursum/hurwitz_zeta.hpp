#ifndef HURSUM_HURWITZ_ZETA_HPP
#define HURSUM_HURWITZ_ZETA_HPP

#include "bernoulli.hpp"
#include "complex.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace hursum {

// Truncated Laurent expansion in eps = sigma - sigma0 with at most a simple
// pole: pole/eps + c[0] + c[1] eps + ... + c[4] eps^4. The sigma-derivatives
// of zeta tails are read off the eps coefficients; the pole appears only for
// sigma0 = 1 and must cancel across a full root-of-unity period before a
// value is extracted.
template <class Real>
struct Jet {
    static constexpr int width = 5;
    Cx<Real> pole{};
    std::array<Cx<Real>, width> c{};

    static Jet constant(const Cx<Real>& v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    Jet& operator+=(const Jet& o) {
        pole += o.pole;
        for (int i = 0; i < width; ++i) c[i] += o.c[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        pole -= o.pole;
        for (int i = 0; i < width; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        // a simple pole on both sides would give a double pole
        if (a.pole != Cx<Real>() && b.pole != Cx<Real>())
            throw domain_error("jet product would have a double pole");
        r.pole = a.pole * b.c[0] + b.pole * a.c[0];
        for (int i = 0; i < width; ++i) {
            Cx<Real> s{};
            for (int j = 0; j <= i; ++j) s += a.c[j] * b.c[i - j];
            if (i + 1 < width) s += a.pole * b.c[i + 1] + b.pole * a.c[i + 1];
            r.c[i] = s;
        }
        return r;
    }
    Jet scaled(const Cx<Real>& v) const {
        Jet r;
        r.pole = pole * v;
        for (int i = 0; i < width; ++i) r.c[i] = c[i] * v;
        return r;
    }
    double max_abs() const {
        double m = abs_d(pole);
        for (const auto& x : c) m = std::max(m, abs_d(x));
        return m;
    }
};

// jet of v * e^{-eps logt}; caller supplies logt whenever depth > 0
// (depth = highest eps coefficient actually needed)
template <class Real>
Jet<Real> power_jet(const Cx<Real>& v, const Cx<Real>& logt, int depth) {
    Jet<Real> j;
    j.c[0] = v;
    Cx<Real> f = v;
    for (int i = 1; i <= depth && i < Jet<Real>::width; ++i) {
        f = f * (-logt) / Real(i);
        j.c[i] = f;
    }
    return j;
}

namespace detail {

// How far the argument must be shifted before the Euler-Maclaurin tail
// reaches the requested accuracy with a modest number of Bernoulli terms.
inline long em_shift_target(double tol, long sigma0, double im_t) {
    double bits = -std::log2(std::clamp(tol, 1e-300, 0.5));
    double need = std::max(bits * 0.12 + 8.0, 0.9 * static_cast<double>(sigma0));
    need = std::max(need, 1.1 * std::abs(im_t));
    return static_cast<long>(need) + 2;
}

// Euler-Maclaurin tail of sum_{k>=0}(k+T)^{-sigma} as a jet at sigma0, for T
// already deep in the asymptotic region. Returns false if the Bernoulli
// series hits its divergent turn before reaching tol.
template <class Real>
bool em_tail_jet(long sigma0, const Cx<Real>& T, int depth, double tol, Jet<Real>& out,
                 double& err) {
    Cx<Real> invT = reciprocal(T);
    Cx<Real> L = (depth > 0 || sigma0 == 1) ? log(T) : Cx<Real>();
    Jet<Real> tail;

    if (sigma0 == 1) {
        // T^{1-sigma}/(sigma-1) = e^{-eps L}/eps = 1/eps - L + eps L^2/2 - ...
        tail.pole = Cx<Real>(Real(1));
        Real f(-1);
        for (int i = 0; i < Jet<Real>::width; ++i) {
            tail.c[i] = pow_int(L, i + 1) * f;
            f /= Real(-(i + 2));
        }
    } else {
        Cx<Real> lead = pow_int(invT, sigma0 - 1) / Real(sigma0 - 1);
        Jet<Real> inv_lin;  // 1/(1 + eps/(sigma0-1))
        Real ratio = Real(-1) / Real(sigma0 - 1);
        Cx<Real> acc(Real(1));
        for (int i = 0; i < Jet<Real>::width; ++i) {
            inv_lin.c[i] = acc;
            acc = acc * ratio;
        }
        tail = (power_jet(Cx<Real>(Real(1)), L, depth) * inv_lin).scaled(lead);
    }
    tail += power_jet(pow_int(invT, sigma0), L, depth).scaled(Cx<Real>(Real(1) / Real(2)));

    Jet<Real> poch;  // Pochhammer (sigma)_{2i-1} as a polynomial in eps
    poch.c[0] = Cx<Real>(Real(1));
    Cx<Real> Tfac = pow_int(invT, sigma0 - 1);
    Real fact2i(1);
    double last_term = 1e300;
    for (int i = 1; i <= 160; ++i) {
        for (long add = std::max<long>(0, 2 * (i - 1) - 1); add <= 2 * i - 2; ++add) {
            Jet<Real> lin;
            lin.c[0] = Cx<Real>(Real(sigma0 + add));
            lin.c[1] = Cx<Real>(Real(1));
            poch = poch * lin;
        }
        Tfac = Tfac * invT * invT;
        fact2i *= Real(2 * i - 1) * Real(2 * i);
        Jet<Real> term =
            (power_jet(Tfac, L, depth) * poch).scaled(Cx<Real>(bernoulli_real_2n<Real>(i) / fact2i));
        double mag = term.max_abs();
        if (mag > last_term && i > 3) {
            err = last_term * 4;
            out = tail;
            return false;
        }
        tail += term;
        last_term = mag;
        if (mag < tol * 0.01) {
            err = mag * 4;
            out = tail;
            return true;
        }
    }
    err = last_term * 4;
    out = tail;
    return err <= tol;
}

}  // namespace detail

// Laurent jet of the Hurwitz zeta function sum_{k>=0} (k+t)^{-sigma} around
// integer sigma0 >= 1 (simple pole at sigma0 = 1). Valid for complex t off
// the nonpositive real lattice; integer exponents keep every power
// single-valued. err_out receives an absolute bound for all coefficients.
template <class Real>
Jet<Real> hurwitz_zeta_jet(long sigma0, const Cx<Real>& t, int depth, double tol,
                           double* err_out = nullptr) {
    if (sigma0 < 1) throw domain_error("hurwitz_zeta_jet: sigma0 must be >= 1");

    long target = detail::em_shift_target(tol, sigma0, static_cast<double>(t.im));
    Jet<Real> head;
    long K = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        long K_new = 0;
        double re_t = static_cast<double>(t.re);
        if (re_t < target) K_new = target - static_cast<long>(std::floor(re_t));
        for (long k = K; k < K_new; ++k) {
            Cx<Real> base = t + Cx<Real>(Real(k));
            if (abs_d(base) < 1e-280) throw pole_error("hurwitz_zeta_jet: pole lattice argument");
            Cx<Real> pw = pow_int(reciprocal(base), sigma0);
            if (depth == 0)
                head.c[0] += pw;
            else
                head += power_jet(pw, log(base), depth);
        }
        K = std::max(K, K_new);
        Jet<Real> tail;
        double err = 0;
        if (detail::em_tail_jet<Real>(sigma0, t + Cx<Real>(Real(K)), depth, tol, tail, err) ||
            attempt == 7) {
            if (err_out) *err_out = err;
            head += tail;
            return head;
        }
        target = target * 2 + 16;
    }
    throw precision_error("hurwitz_zeta_jet: failed to converge", 1.0);
}

// plain value, complex second argument
template <class Real>
Cx<Real> hurwitz_zeta_cx(long p, const Cx<Real>& t, const PrecisionContext& ctx) {
    if (p < 2) throw domain_error("hurwitz_zeta: exponent must be >= 2");
    double err = 0;
    Jet<Real> j = hurwitz_zeta_jet<Real>(p, t, 0, ctx.target_tol * 0.5, &err);
    if (err > ctx.target_tol) throw precision_error("hurwitz_zeta: tolerance not met", err);
    return j.c[0];
}

// sum_{n>=0} 1/(n+q)^p for real q > 0: direct head plus Euler-Maclaurin tail
template <class Real>
Real hurwitz_zeta(long p, const Real& q, const PrecisionContext& ctx) {
    if (q <= 0) throw domain_error("hurwitz_zeta: q must be positive");
    return hurwitz_zeta_cx<Real>(p, Cx<Real>(q), ctx).re;
}

// digamma for complex z off the nonpositive integers: recurrence shift into
// the asymptotic region, then the Stirling-type series.
template <class Real>
Cx<Real> digamma(Cx<Real> z, const PrecisionContext& ctx) {
    if (mp::abs(z.im) < Real(ctx.pole_guard)) {
        Real nearest = mp::round(z.re);
        if (nearest <= 0 && mp::abs(z.re - nearest) < Real(ctx.pole_guard))
            throw domain_error("digamma: argument within pole guard of a nonpositive integer");
    }
    long target = detail::em_shift_target(ctx.target_tol, 2, static_cast<double>(z.im));
    Cx<Real> shift{};
    long steps = 0;
    while (static_cast<double>(z.re) < target) {
        shift += reciprocal(z);
        z += Cx<Real>(Real(1));
        if (++steps > 1000000) throw domain_error("digamma: shift failed");
    }
    Cx<Real> inv = reciprocal(z);
    Cx<Real> inv2 = inv * inv;
    Cx<Real> acc = log(z) - inv * Real(0.5);
    Cx<Real> p = inv2;
    double last = 1e300;
    for (int i = 1; i <= 200; ++i) {
        Cx<Real> term = p * (bernoulli_real_2n<Real>(i) / Real(2 * i));
        double mag = abs_d(term);
        if (mag > last && i > 3) break;
        acc -= term;
        last = mag;
        if (mag < ctx.target_tol * 0.01) break;
        p = p * inv2;
    }
    return acc - shift;
}

}  // namespace hursum

#endif
