#ifndef HURSUM_ROOT_OF_UNITY_HPP
#define HURSUM_ROOT_OF_UNITY_HPP

#include "complex.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace hursum {

// Exact N-th root of unity e^{2*pi*i*k/N}, stored as (order, index) and only
// embedded into the working precision on demand. Arithmetic stays exact, so
// statements like "sum over one period vanishes" can be asserted symbolically.
struct RootOfUnity {
    long order = 1;  // N >= 1
    long index = 0;  // k, reduced mod N

    RootOfUnity() = default;
    RootOfUnity(long n, long k) : order(n) {
        if (n <= 0) throw spec_error("root of unity order must be positive");
        index = ((k % n) + n) % n;
        reduce();
    }

    // canonical form: gcd(index, order) folded out so (4,2) == (2,1)
    void reduce() {
        long g = std::gcd(index == 0 ? order : index, order);
        if (g > 1) {
            order /= g;
            index /= g;
        }
        if (index == 0) order = 1;
    }

    bool is_one() const { return index == 0; }

    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {2, 1}; }
    static RootOfUnity imag_i() { return {4, 1}; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        long n = std::lcm(a.order, b.order);
        return {n, a.index * (n / a.order) + b.index * (n / b.order)};
    }
    RootOfUnity inverse() const { return {order, -index}; }
    RootOfUnity pow(long e) const {
        long r = ((e % order) + order) % order;
        return {order, index * r};
    }
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.order == b.order && a.index == b.index;
    }
    friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
        return a.order != b.order ? a.order < b.order : a.index < b.index;
    }

    template <class Real>
    Cx<Real> embed() const {
        using mp::cos;
        using mp::sin;
        switch (order) {
            case 1: return Cx<Real>(Real(1));
            case 2: return Cx<Real>(Real(-1));
            case 4: return index == 1 ? Cx<Real>(Real(0), Real(1)) : Cx<Real>(Real(0), Real(-1));
            default: {
                Real t = Real(2) * pi_v<Real>() * Real(index) / Real(order);
                return {cos(t), sin(t)};
            }
        }
    }

    // cycle of powers z^0..z^{N-1}; z^n is cycle[n % N]
    template <class Real>
    std::vector<Cx<Real>> power_cycle() const {
        std::vector<Cx<Real>> c(order);
        c[0] = Cx<Real>(Real(1));
        Cx<Real> z = embed<Real>();
        for (long j = 1; j < order; ++j) c[j] = c[j - 1] * z;
        return c;
    }

    std::string str() const {
        if (order == 1) return "1";
        if (order == 2) return "-1";
        if (order == 4) return index == 1 ? "i" : "-i";
        return "w" + std::to_string(order) + "^" + std::to_string(index);
    }
};

inline RootOfUnity product(const std::vector<RootOfUnity>& rs) {
    RootOfUnity p;
    for (const auto& r : rs) p = p * r;
    return p;
}

}  // namespace hursum

#endif
