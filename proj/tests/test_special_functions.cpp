#include <hursum/special_functions.hpp>

#include "test_util.hpp"

#include <random>

using namespace tu;
namespace hz = hursum;
namespace mp = hursum::mp;

TEST_CASE("polylog calibration against bernoulli closed form") {
    auto c = ctx30();
    for (int m = 1; m <= 4; ++m) {
        C got = hz::polylog<R>(2 * m, one(), c);
        R want = hz::even_zeta_via_bernoulli<R>(m);
        check_close(got, C(want), 1e-30, "Li_{2m}(1)");
    }
}

TEST_CASE("polylog examples") {
    auto c = ctx30();
    R pi = hz::pi_v<R>();
    check_close(hz::polylog<R>(2, one(), c), C(pi * pi / 6), 1e-30, "Li_2(1)");
    check_close(hz::polylog<R>(1, mone(), c), C(-hz::ln2_v<R>()), 1e-30, "Li_1(-1)");

    // oracle: long partial sum with averaging over one period of i^n
    {
        long n0 = 100000;
        C s{};
        auto cyc = im().power_cycle<R>();
        std::vector<C> snapshots;
        for (long n = 1; n <= n0 + 3; ++n) {
            s += cyc[n % 4] / R(n * n);
            if (n >= n0) snapshots.push_back(s);
        }
        C avg = (snapshots[0] + snapshots[1] + snapshots[2] + snapshots[3]) / R(4);
        C got = hz::polylog<R>(2, im(), c);
        check_close(got, avg, 1e-12, "Li_2(i) vs averaged partial sums");
        check_close(got, C::from_doubles(-0.2056167584, 0.9159655942), 2e-10, "Li_2(i) frozen");
    }
    CHECK_THROWS_AS(hz::polylog<R>(1, one(), ctx30()), hz::divergence_error);
}

TEST_CASE("hurwitz polylog examples and coincidence") {
    auto c = ctx30();
    R pi = hz::pi_v<R>();
    check_close(hz::hurwitz_polylog<R>(2, one(), C(R(0)), c), C(pi * pi / 6), 1e-30, "a=0");
    check_close(hz::hurwitz_polylog<R>(1, mone(), C(R(0)), c), C(-hz::ln2_v<R>()), 1e-30);
    // sum over (n-1/2)^{-2} = pi^2/2, with a brute-force bracketing oracle
    {
        C got = hz::hurwitz_polylog<R>(2, one(), C(-R(1) / 2), c);
        long K = 3000;
        R partial(0);
        for (long n = 1; n <= K; ++n) partial += mp::pow(R(n) - R(1) / 2, -2);
        CHECK(got.re >= partial + 1 / (R(K) + R(1) / 2));
        CHECK(got.re <= partial + 1 / (R(K) - R(1) / 2));
        check_close(got, C(pi * pi / 2), 1e-30, "pi^2/2");
    }
    // coincidence with polylog at a = 0 for all N <= 6, p <= 4
    for (long N : {1L, 2L, 3L, 4L, 5L, 6L}) {
        for (long k = 0; k < N; ++k) {
            RootOfUnity x(N, k);
            for (long p = 1; p <= 4; ++p) {
                if (p == 1 && x.is_one()) continue;
                check_close(hz::hurwitz_polylog<R>(p, x, C(R(0)), c), hz::polylog<R>(p, x, c),
                            1e-29, "coincidence a=0");
            }
        }
    }
    CHECK_THROWS_AS(hz::hurwitz_polylog<R>(1, one(), C(R(0)), c), hz::divergence_error);
    CHECK_THROWS_AS(hz::hurwitz_polylog<R>(2, im(), C(R(-2) + R(1e-9)), c), hz::domain_error);
}

TEST_CASE("hurwitz polylog vs brute force at complex shift") {
    auto c = ctx30();
    C a(R("0.3"), R("0.1"));
    C got = hz::hurwitz_polylog<R>(2, im(), a, c);
    long K = 100000;
    C brute{};
    auto cyc = im().power_cycle<R>();
    for (long n = 1; n <= K; ++n) brute += cyc[n % 4] * hz::pow_int(hz::reciprocal(C(R(n)) + a), 2);
    CHECK(adiff(got, brute) < 6.0 / (double(K) * double(K)));
}

TEST_CASE("finite sum basics") {
    auto a = C(R("0.25"));
    CHECK(hz::finite_sum<R>(0, 3, im(), a) == C{});
    check_close(hz::finite_sum<R>(1, 2, mone(), a),
                C(R(-1)) * hz::pow_int(hz::reciprocal(C(R(1)) + a), 2), 0.0, "single term");
    check_close(hz::finite_sum<R>(2, 1, mone(), C(R(0))), C(-R(1) / 2), 1e-70, "-1 + 1/2");
}

TEST_CASE("lerch phi examples") {
    auto c = ctx30();
    R pi = hz::pi_v<R>();
    check_close(hz::lerch_phi_deriv<R>(1, C(R(1)), mone(), c), C(hz::ln2_v<R>()), 1e-30, "ln 2");
    check_close(hz::lerch_phi_deriv<R>(2, C(R(1)), mone(), c), C(pi * pi / 12), 1e-30, "pi^2/12");
    // brute-force oracle for pi^2/12: pairs 1/(2j+1)^2 - 1/(2j+2)^2
    {
        long K = 40000;
        R acc(0);
        for (long j = 0; 2 * j + 2 <= K; ++j)
            acc += mp::pow(R(2 * j + 1), -2) - mp::pow(R(2 * j + 2), -2);
        CHECK(mp::abs(acc - pi * pi / 12) < R(4) / (R(K) * R(K)));
    }
    // reindex relation: phi(1;1;i) = Li_1(i)/i
    check_close(hz::lerch_phi_deriv<R>(1, C(R(1)), im(), c),
                hz::polylog<R>(1, im(), c) / im().embed<R>(), 1e-29, "reindex");
    CHECK_THROWS_AS(hz::lerch_phi_deriv<R>(1, C(R(1)), one(), ctx30()), hz::domain_error);
    CHECK_THROWS_AS(hz::lerch_phi_deriv<R>(2, C(R(-3) + R(1e-8)), im(), ctx30()),
                    hz::domain_error);
}

TEST_CASE("ext trig values, antisymmetry, quasi-periodicity") {
    auto c = ctx30();
    R pi = hz::pi_v<R>();
    check_close(hz::ext_trig<R>(C(R(1) / 2), one(), c), C(R(0)), 1e-30, "cot(pi/2)");
    check_close(hz::ext_trig<R>(C(R(1) / 4), one(), c), C(pi), 1e-30, "pi cot(pi/4)");
    // independent route: pi cot(pi s) = -1/s + psi(-s) - psi(s)
    {
        C s(R(1) / 4);
        C via_psi = -hz::reciprocal(s) + hz::digamma(-s, c) - hz::digamma(s, c);
        check_close(via_psi, C(pi), 1e-29, "psi route");
    }
    check_close(hz::ext_trig<R>(C(R("-0.3")), mim(), c), -hz::ext_trig<R>(C(R("0.3")), im(), c),
                2e-30, "antisymmetry sample");

    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-0.45, 0.45);
    std::vector<RootOfUnity> roots = {one(), mone(), im(), RootOfUnity(3, 1), RootOfUnity(6, 1)};
    for (const auto& x : roots) {
        for (int i = 0; i < 6; ++i) {
            C s(R(u(rng)) + R(2), R(u(rng)));
            C lhs = hz::ext_trig<R>(s + C(R(1)), x, c);
            C rhs = hz::ext_trig<R>(s, x, c) * x.inverse().embed<R>();
            check_close(lhs, rhs, 1e-29, "quasi-periodicity");
            check_close(hz::ext_trig<R>(-s, x.inverse(), c), -hz::ext_trig<R>(s, x, c), 1e-29,
                        "antisymmetry");
        }
    }
    CHECK_THROWS_AS(hz::ext_trig<R>(C(R(2) + R(1e-9)), im(), ctx30()), hz::pole_error);
}

TEST_CASE("complex shift excluded-lattice guard") {
    using hz::ComplexShift;
    using hz::ExcludedSet;
    CHECK_NOTHROW(ComplexShift<R>(C(R("0.3")), ExcludedSet::NotInteger));
    CHECK_THROWS_AS(ComplexShift<R>(C(R(2) + R(1e-9)), ExcludedSet::NotInteger),
                    hz::domain_error);
    // 2 is in N but not in N^-, so only the former tag rejects it
    CHECK_THROWS_AS(ComplexShift<R>(C(R(2)), ExcludedSet::NotNatural), hz::domain_error);
    CHECK_NOTHROW(ComplexShift<R>(C(R(2)), ExcludedSet::NotNegNatural));
    CHECK_THROWS_AS(ComplexShift<R>(C(R(-1) + R(1e-8)), ExcludedSet::NotNegNatural),
                    hz::domain_error);
    CHECK_NOTHROW(ComplexShift<R>(C(R(0)), ExcludedSet::NotNegNatural));
    // an imaginary offset clears the guard
    CHECK_NOTHROW(ComplexShift<R>(C(R(2), R("0.1")), ExcludedSet::NotInteger));
}

TEST_CASE("bridge identity lerch <-> hurwitz polylog") {
    auto c = ctx30();
    C a(R("0.3"), R("0.2"));
    for (long N : {2L, 3L, 4L, 6L}) {
        RootOfUnity x(N, 1);
        for (long p = 1; p <= 3; ++p) {
            C lhs = hz::hurwitz_polylog<R>(p, x, a, c);
            C rhs = x.embed<R>() * hz::lerch_phi_deriv<R>(p, C(R(1)) + a, x, c);
            check_close(lhs, rhs, 1e-29, "bridge x != 1");
        }
    }
    for (long p = 2; p <= 4; ++p) {
        C lhs = hz::hurwitz_polylog<R>(p, one(), a, c);
        C rhs = hz::hurwitz_zeta_cx<R>(p, C(R(1)) + a, c);
        check_close(lhs, rhs, 1e-29, "bridge x = 1");
    }
}
