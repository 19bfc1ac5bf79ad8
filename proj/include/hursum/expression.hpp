#ifndef HURSUM_EXPRESSION_HPP
#define HURSUM_EXPRESSION_HPP

#include "euler_sums.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

namespace hursum {

// Shift parameters of every identity are affine in the base shift a with
// exact integer/rational data: value = coef_a * a + offset. Keeping them
// symbolic makes trees printable, hashable and free of rounding.
struct AffineShift {
    int coef_a = 0;
    Rational offset = 0;

    static AffineShift zero() { return {0, 0}; }
    static AffineShift base() { return {1, 0}; }                  // a
    static AffineShift base_plus(int k) { return {1, k}; }        // a + k
    static AffineShift minus_base_plus(int k) { return {-1, k}; }  // k - a

    template <class Real>
    Cx<Real> value(const Cx<Real>& a) const {
        Cx<Real> v = a * Real(coef_a);
        v += Cx<Real>(to_real<Real>(offset));
        return v;
    }
    std::string str() const {
        std::ostringstream os;
        auto rat = [](const Rational& r) {
            std::ostringstream s;
            s << r;
            return s.str();
        };
        if (coef_a == 0) return rat(offset);
        std::string base = coef_a == 1 ? "a" : (coef_a == -1 ? "-a" : std::to_string(coef_a) + "a");
        if (offset == 0) return base;
        if (offset > 0) return base + "+" + rat(offset);
        return base + rat(offset);
    }
    friend bool operator==(const AffineShift& x, const AffineShift& y) {
        return x.coef_a == y.coef_a && x.offset == y.offset;
    }
};

// exact coefficient: rational times a root of unity
struct Coef {
    Rational rat = 1;
    RootOfUnity root;

    Coef() = default;
    Coef(Rational r) : rat(std::move(r)) {}
    Coef(Rational r, RootOfUnity z) : rat(std::move(r)), root(z) {}
    static Coef unit(RootOfUnity z) { return {1, z}; }

    friend Coef operator*(const Coef& x, const Coef& y) {
        return {x.rat * y.rat, x.root * y.root};
    }
    Coef negated() const { return {-rat, root}; }
    bool is_zero() const { return rat == 0; }

    template <class Real>
    Cx<Real> value() const {
        return root.embed<Real>() * to_real<Real>(rat);
    }
    std::string str() const {
        std::ostringstream os;
        os << rat;
        std::string s = os.str();
        if (!root.is_one()) s += "*" + root.str();
        return s;
    }
};

// Expression tree: a sum of terms, each term an exact coefficient times a
// product of factors; a factor is either an atomic evaluable or a nested
// sum. Atoms cover classical polylogs, Hurwitz polylogs, the three Euler-sum
// families, and multiple Hurwitz polylogarithms.
struct Expr {
    enum class Kind { Polylog, HurwitzPolylog, EulerSum, Mpl, Sum };

    Kind kind = Kind::Sum;
    // atom payload
    Family family = Family::S;
    std::vector<long> ps;            // exponents (polylog: single entry)
    long q = 0;                      // Euler outer exponent
    std::vector<RootOfUnity> args;   // inner arguments (polylog: single entry)
    RootOfUnity outer_arg;           // Euler outer argument
    AffineShift shift;               // denominator shift (HLi/Mpl) or family shift (Euler)

    struct Term {
        Coef coef;
        std::vector<Expr> factors;
    };
    std::vector<Term> terms;  // for Kind::Sum

    // ---- constructors ----
    static Expr li(long p, RootOfUnity x) {
        Expr e;
        e.kind = Kind::Polylog;
        e.ps = {p};
        e.args = {x};
        return e;
    }
    // paper-label constructor: Li_p(x; label) has denominator shift label-1
    static Expr hli_label(long p, RootOfUnity x, AffineShift label) {
        Expr e;
        e.kind = Kind::HurwitzPolylog;
        e.ps = {p};
        e.args = {x};
        e.shift = {label.coef_a, label.offset - 1};
        return e;
    }
    static Expr hli_den(long p, RootOfUnity x, AffineShift den) {
        Expr e;
        e.kind = Kind::HurwitzPolylog;
        e.ps = {p};
        e.args = {x};
        e.shift = den;
        return e;
    }
    static Expr euler(Family f, std::vector<long> ps, long q, std::vector<RootOfUnity> xs,
                      RootOfUnity x, AffineShift fam_shift) {
        Expr e;
        e.kind = Kind::EulerSum;
        e.family = f;
        e.ps = std::move(ps);
        e.q = q;
        e.args = std::move(xs);
        e.outer_arg = x;
        e.shift = fam_shift;
        return e;
    }
    // denominator-shift multiple Hurwitz polylog
    static Expr mpl_den(std::vector<long> ks, std::vector<RootOfUnity> xs, AffineShift den) {
        Expr e;
        e.kind = Kind::Mpl;
        e.ps = std::move(ks);
        e.args = std::move(xs);
        e.shift = den;
        return e;
    }
    static Expr sum() { return Expr{}; }

    Expr& add(Coef c, std::vector<Expr> factors) {
        if (kind != Kind::Sum) throw spec_error("Expr::add on a non-sum node");
        terms.push_back({std::move(c), std::move(factors)});
        return *this;
    }
    Expr& add(Coef c, Expr factor) { return add(std::move(c), std::vector<Expr>{std::move(factor)}); }

    bool is_atom() const { return kind != Kind::Sum; }
    size_t term_count() const { return terms.size(); }

    // Euler-sum order of the atom (0 for non-Euler atoms); max over the tree
    long max_euler_order() const {
        if (kind == Kind::EulerSum) return static_cast<long>(ps.size());
        long m = 0;
        if (kind == Kind::Sum)
            for (const auto& t : terms)
                for (const auto& f : t.factors) m = std::max(m, f.max_euler_order());
        return m;
    }
    long max_mpl_depth() const {
        if (kind == Kind::Mpl) return static_cast<long>(ps.size());
        long m = 0;
        if (kind == Kind::Sum)
            for (const auto& t : terms)
                for (const auto& f : t.factors) m = std::max(m, f.max_mpl_depth());
        return m;
    }
    bool contains_family(Family f) const {
        if (kind == Kind::EulerSum) return family == f;
        if (kind == Kind::Sum)
            for (const auto& t : terms)
                for (const auto& fac : t.factors)
                    if (fac.contains_family(f)) return true;
        return false;
    }

    // an atom whose defining series diverges regardless of the shift
    bool divergent() const {
        switch (kind) {
            case Kind::Polylog:
            case Kind::HurwitzPolylog: return ps[0] == 1 && args[0].is_one();
            case Kind::EulerSum: return q == 1 && outer_arg.is_one();
            case Kind::Mpl: return ps.back() == 1 && args.back().is_one();
            case Kind::Sum:
                for (const auto& t : terms)
                    for (const auto& f : t.factors)
                        if (f.divergent()) return true;
                return false;
        }
        return false;
    }

    std::string str() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::Polylog: os << "Li_" << ps[0] << "(" << args[0].str() << ")"; break;
            case Kind::HurwitzPolylog:
                os << "Li_" << ps[0] << "(" << args[0].str() << "; a=" << shift.str() << ")";
                break;
            case Kind::Mpl: {
                os << "Li*_{";
                for (size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
                os << "}(";
                for (size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i].str();
                os << "; a=" << shift.str() << ")";
                break;
            }
            case Kind::EulerSum: {
                os << family_name(family) << "^{(" << shift.str() << ")}_{";
                for (size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
                os << ";" << q << "}(";
                for (size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i].str();
                os << "; " << outer_arg.str() << ")";
                break;
            }
            case Kind::Sum: {
                std::vector<std::string> parts;
                for (const auto& t : terms) {
                    std::string s = t.coef.str();
                    for (const auto& f : t.factors)
                        s += " * " + (f.kind == Kind::Sum ? "(" + f.str() + ")" : f.str());
                    parts.push_back(std::move(s));
                }
                for (size_t i = 0; i < parts.size(); ++i) os << (i ? " + " : "") << parts[i];
                break;
            }
        }
        return os.str();
    }

    // canonical form: terms sorted by their printed representation
    Expr canonical() const {
        Expr e = *this;
        if (kind != Kind::Sum) return e;
        for (auto& t : e.terms)
            for (auto& f : t.factors) f = f.canonical();
        std::stable_sort(e.terms.begin(), e.terms.end(), [](const Term& x, const Term& y) {
            auto key = [](const Term& t) {
                std::string s;
                for (const auto& f : t.factors) s += f.str() + "|";
                return s;
            };
            return key(x) < key(y);
        });
        return e;
    }
};

// Memoizing evaluator: atoms are cached per (base shift, context) by their
// printed form, which pins the exact affine shift and arguments.
template <class Real>
struct Evaluator {
    Cx<Real> a;
    PrecisionContext ctx;
    std::map<std::string, Cx<Real>> memo;
    double atom_err = 0;  // worst per-atom error estimate seen

    Cx<Real> atom(const Expr& e) {
        std::string key = e.str();
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Cx<Real> v{};
        switch (e.kind) {
            case Expr::Kind::Polylog: v = polylog<Real>(e.ps[0], e.args[0], ctx); break;
            case Expr::Kind::HurwitzPolylog:
                v = hurwitz_polylog<Real>(e.ps[0], e.args[0], e.shift.value(a), ctx);
                break;
            case Expr::Kind::EulerSum: {
                SumSpec<Real> spec;
                spec.family = e.family;
                spec.ps = e.ps;
                spec.q = e.q;
                spec.xs = e.args;
                spec.x = e.outer_arg;
                spec.shift = e.shift.value(a);
                auto r = eval_euler_sum(spec, ctx);
                atom_err = std::max(atom_err, r.error_estimate);
                v = r.value;
                break;
            }
            case Expr::Kind::Mpl: {
                MplSpec<Real> spec;
                spec.ks = e.ps;
                spec.xs = e.args;
                spec.shift = e.shift.value(a);
                auto r = eval_mpl(spec, ctx);
                atom_err = std::max(atom_err, r.error_estimate);
                v = r.value;
                break;
            }
            default: throw spec_error("Evaluator::atom on a sum node");
        }
        memo.emplace(std::move(key), v);
        return v;
    }

    Cx<Real> eval(const Expr& e) {
        if (e.is_atom()) return atom(e);
        Cx<Real> total{};
        for (const auto& t : e.terms) {
            Cx<Real> prod = t.coef.template value<Real>();
            for (const auto& f : t.factors) prod *= eval(f);
            total += prod;
        }
        return total;
    }
};

// ---- Euler-sum <-> multiple-polylog bridges ----

// S^{(a)}_{p;q}(x1; x) = Li*_{p,q}(x1, x; a) + Li*_{p+q}(x1 x; a)
// (denominator-shift convention on the right)
inline Expr linear_sum_to_mpl(long p, long q, RootOfUnity x1, RootOfUnity x, AffineShift a) {
    if (q == 1 && x.is_one()) throw divergence_error("linear_sum_to_mpl: divergent spec");
    Expr tree = Expr::sum();
    tree.add(Coef(1), Expr::mpl_den({p, q}, {x1, x}, a));
    tree.add(Coef(1), Expr::mpl_den({p + q}, {x1 * x}, a));
    return tree;
}

// S^{(a)}_{p1,p2;q}(x1,x2; x) = -Li*_{p2,q,p1}(x2,x,x1;a) - Li*_{p2+q,p1}(x2 x, x1;a)
//   + Li_p1(x1; den a) (Li*_{p2,q}(x2,x;a) + Li*_{p2+q}(x x2;a))
inline Expr quadratic_sum_to_mpl(long p1, long p2, long q, RootOfUnity x1, RootOfUnity x2,
                                 RootOfUnity x, AffineShift a) {
    if (q == 1 && x.is_one()) throw divergence_error("quadratic_sum_to_mpl: divergent spec");
    if ((p1 == 1 && x1.is_one()) || (p2 == 1 && x2.is_one()))
        throw spec_error("quadratic_sum_to_mpl: divergent inner (1,1) pair");
    Expr tree = Expr::sum();
    tree.add(Coef(-1), Expr::mpl_den({p2, q, p1}, {x2, x, x1}, a));
    tree.add(Coef(-1), Expr::mpl_den({p2 + q, p1}, {x2 * x, x1}, a));
    tree.add(Coef(1), {Expr::hli_den(p1, x1, a), Expr::mpl_den({p2, q}, {x2, x}, a)});
    tree.add(Coef(1), {Expr::hli_den(p1, x1, a), Expr::mpl_den({p2 + q}, {x * x2}, a)});
    return tree;
}

}  // namespace hursum

#endif
