#ifndef HURSUM_BERNOULLI_HPP
#define HURSUM_BERNOULLI_HPP

#include "precision.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <mutex>
#include <vector>

namespace hursum {

using Rational = mp::cpp_rational;

// Exact Bernoulli numbers from the generating function x/(e^x - 1),
// table-backed through B_40.
inline const Rational& bernoulli(int n) {
    if (n < 0 || n > 40) throw unsupported_error("bernoulli: n out of supported range [0,40]");
    static const std::array<Rational, 41> table = [] {
        std::array<Rational, 41> t{};
        auto set = [&t](int i, const char* num, const char* den) {
            t[i] = Rational(mp::cpp_int(num), mp::cpp_int(den));
        };
        set(0, "1", "1");
        set(1, "-1", "2");
        set(2, "1", "6");
        set(4, "-1", "30");
        set(6, "1", "42");
        set(8, "-1", "30");
        set(10, "5", "66");
        set(12, "-691", "2730");
        set(14, "7", "6");
        set(16, "-3617", "510");
        set(18, "43867", "798");
        set(20, "-174611", "330");
        set(22, "854513", "138");
        set(24, "-236364091", "2730");
        set(26, "8553103", "6");
        set(28, "-23749461029", "870");
        set(30, "8615841276005", "14322");
        set(32, "-7709321041217", "510");
        set(34, "2577687858367", "6");
        set(36, "-26315271553053477373", "1919190");
        set(38, "2929993913841559", "6");
        set(40, "-261082718496449122051", "13530");
        return t;
    }();
    return table[n];
}

template <class Real>
Real to_real(const Rational& q) {
    return Real(mp::numerator(q).str()) / Real(mp::denominator(q).str());
}

// zeta(2m) = (-1)^{m-1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
template <class Real>
Real even_zeta_via_bernoulli(int m) {
    if (m < 1 || m > 10) throw unsupported_error("even_zeta_via_bernoulli: m out of range [1,10]");
    Real b = to_real<Real>(bernoulli(2 * m));
    Real twopi = Real(2) * pi_v<Real>();
    Real num = mp::pow(twopi, 2 * m) * b;
    Real fact(1);
    for (int k = 2; k <= 2 * m; ++k) fact *= k;
    Real v = num / (Real(2) * fact);
    return (m % 2 == 1) ? v : Real(-v);
}

// Real-valued B_{2n} for the Euler-Maclaurin engine, which needs indices
// past the exact table. Cached per Real type.
template <class Real>
const Real& bernoulli_real_2n(unsigned n) {
    static std::vector<Real> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    while (cache.size() <= n) {
        cache.push_back(boost::math::bernoulli_b2n<Real>(static_cast<int>(cache.size())));
    }
    return cache[n];
}

}  // namespace hursum

#endif
