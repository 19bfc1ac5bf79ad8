#ifndef HURSUM_SPECIAL_FUNCTIONS_HPP
#define HURSUM_SPECIAL_FUNCTIONS_HPP

#include "hurwitz_zeta.hpp"
#include "root_of_unity.hpp"

#include <cstdlib>

namespace hursum {

enum class ExcludedSet { NotNatural, NotInteger, NotNegNatural };

inline const char* excluded_set_name(ExcludedSet s) {
    switch (s) {
        case ExcludedSet::NotNatural: return "not-in-N";
        case ExcludedSet::NotInteger: return "not-in-Z";
        default: return "not-in-N-";
    }
}

// Complex shift parameter together with the lattice its hypotheses exclude.
template <class Real>
struct ComplexShift {
    Cx<Real> value{};
    ExcludedSet excluded = ExcludedSet::NotNegNatural;

    ComplexShift() = default;
    ComplexShift(Cx<Real> v, ExcludedSet e, double guard = 1e-6) : value(std::move(v)), excluded(e) {
        if (lattice_distance() < guard)
            throw domain_error(std::string("shift within pole guard of excluded lattice ") +
                               excluded_set_name(e));
    }

    double lattice_distance() const {
        double im = std::abs(static_cast<double>(value.im));
        double re = static_cast<double>(value.re);
        double nearest = std::round(re);
        switch (excluded) {
            case ExcludedSet::NotInteger: break;
            case ExcludedSet::NotNatural:
                if (nearest < 1) nearest = 1;
                break;
            case ExcludedSet::NotNegNatural:
                if (nearest > -1) nearest = -1;
                break;
        }
        return std::hypot(re - nearest, im);
    }
};

// distance from z to the set {m, m <= hi_cap} of integers (hi_cap may be
// +inf via cap = LONG_MAX); used for pole guards on raw complex values
template <class Real>
double integer_lattice_distance(const Cx<Real>& z, long lo_cap, long hi_cap) {
    double re = static_cast<double>(z.re);
    double im = static_cast<double>(z.im);
    double nearest = std::round(re);
    if (nearest < static_cast<double>(lo_cap)) nearest = static_cast<double>(lo_cap);
    if (nearest > static_cast<double>(hi_cap)) nearest = static_cast<double>(hi_cap);
    return std::hypot(re - nearest, im);
}

// finite sum zeta_n(p; x; a) = sum_{k=1}^{n} x^k / (k+a)^p, exact at working
// precision. a = 0 gives the unshifted zeta_n(p; x).
template <class Real>
Cx<Real> finite_sum(long n, long p, const RootOfUnity& x, const Cx<Real>& a) {
    Cx<Real> acc{};
    auto cycle = x.power_cycle<Real>();
    for (long k = 1; k <= n; ++k) {
        Cx<Real> inv = reciprocal(Cx<Real>(Real(k)) + a);
        acc += cycle[k % x.order] * pow_int(inv, p);
    }
    return acc;
}

// Lerch-type sum_{k>=0} x^k/(k+s)^p for a root of unity x != 1, computed by
// period-block reduction to Hurwitz zeta (p >= 2) or digamma (p = 1; the
// divergent parts cancel because sum_{j} x^j = 0 exactly over a period).
template <class Real>
Cx<Real> lerch_phi_deriv(long p, const Cx<Real>& s, const RootOfUnity& x,
                         const PrecisionContext& ctx) {
    if (p < 1) throw domain_error("lerch_phi_deriv: p must be >= 1");
    if (x.is_one()) throw domain_error("lerch_phi_deriv: x = 1 not admissible");
    if (integer_lattice_distance(s, LONG_MIN, 0) < ctx.pole_guard)
        throw domain_error("lerch_phi_deriv: s within pole guard of a nonpositive integer");
    long N = x.order;
    auto cycle = x.power_cycle<Real>();
    PrecisionContext block = ctx.with_tol(ctx.target_tol / (2.0 * N));
    Cx<Real> acc{};
    Real rN(N);
    if (p == 1) {
        for (long j = 0; j < N; ++j)
            acc += cycle[j % N] * digamma(Cx<Real>((Real(j) + s.re) / rN, s.im / rN), block);
        return -acc / rN;
    }
    for (long j = 0; j < N; ++j)
        acc += cycle[j % N] *
               hurwitz_zeta_cx<Real>(p, Cx<Real>((Real(j) + s.re) / rN, s.im / rN), block);
    return acc / pow_int(Cx<Real>(rN), p);
}

// Li_p(x) at a root of unity; p = 1 is the principal-branch logarithm.
template <class Real>
Cx<Real> polylog(long p, const RootOfUnity& x, const PrecisionContext& ctx) {
    if (p < 1) throw domain_error("polylog: p must be >= 1");
    if (p == 1) {
        if (x.is_one()) throw divergence_error("polylog: Li_1(1) diverges");
        return -log(Cx<Real>(Real(1)) - x.embed<Real>());
    }
    long N = x.order;
    auto cycle = x.power_cycle<Real>();
    PrecisionContext block = ctx.with_tol(ctx.target_tol / (2.0 * N));
    Cx<Real> acc{};
    Real rN(N);
    for (long j = 1; j <= N; ++j)
        acc += cycle[j % N] * Cx<Real>(hurwitz_zeta<Real>(p, Real(j) / rN, block));
    return acc / pow_int(Cx<Real>(rN), p);
}

// Hurwitz polylogarithm sum_{n>=1} x^n/(n+a)^p. p >= 2 goes through Hurwitz
// zeta blocks over one period; p = 1 (x != 1 only) through digamma blocks,
// where sum_j x^j = 0 holds exactly for the root of unity, cancelling the
// divergent part.
template <class Real>
Cx<Real> hurwitz_polylog(long p, const RootOfUnity& x, const Cx<Real>& a,
                         const PrecisionContext& ctx) {
    if (p < 1) throw domain_error("hurwitz_polylog: p must be >= 1");
    if (integer_lattice_distance(a, LONG_MIN, -1) < ctx.pole_guard)
        throw domain_error("hurwitz_polylog: shift within pole guard of a negative integer");
    long N = x.order;
    Real rN(N);
    auto cycle = x.power_cycle<Real>();
    PrecisionContext block = ctx.with_tol(ctx.target_tol / (2.0 * N));
    if (p == 1) {
        if (x.is_one()) throw divergence_error("hurwitz_polylog: (p,x) = (1,1) diverges");
        Cx<Real> acc{};
        for (long j = 1; j <= N; ++j)
            acc += cycle[j % N] * digamma((Cx<Real>(Real(j)) + a) / rN, block);
        return -acc / rN;
    }
    Cx<Real> acc{};
    for (long j = 1; j <= N; ++j)
        acc += cycle[j % N] * hurwitz_zeta_cx<Real>(p, (Cx<Real>(Real(j)) + a) / rN, block);
    return acc / pow_int(Cx<Real>(rN), p);
}

// Phi(s;x) = phi(s;x) - phi(-s;x^{-1}) - 1/s, the extended trigonometric
// function; for x = 1 this is pi*cot(pi*s).
template <class Real>
Cx<Real> ext_trig(const Cx<Real>& s, const RootOfUnity& x, const PrecisionContext& ctx) {
    if (integer_lattice_distance(s, LONG_MIN, LONG_MAX) < ctx.pole_guard)
        throw pole_error("ext_trig: s within pole guard of an integer");
    if (x.is_one()) {
        Real p = pi_v<Real>();
        Cx<Real> ps = s * p;
        return cos(ps) / sin(ps) * p;
    }
    PrecisionContext half = ctx.with_tol(ctx.target_tol / 2.0);
    return lerch_phi_deriv<Real>(1, s, x, half) - lerch_phi_deriv<Real>(1, -s, x.inverse(), half) -
           reciprocal(s);
}

}  // namespace hursum

#endif
