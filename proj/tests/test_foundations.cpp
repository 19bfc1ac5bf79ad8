#include <hursum/bernoulli.hpp>
#include <hursum/hurwitz_zeta.hpp>
#include <hursum/special_functions.hpp>

#include "test_util.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <vector>

using namespace tu;
namespace hz = hursum;
namespace mp = hursum::mp;

namespace {

// independent oracle: coefficients of x/(e^x - 1) by exact power-series
// division; returns B_0..B_K
std::vector<hz::Rational> bernoulli_by_series_division(int K) {
    using hz::Rational;
    std::vector<Rational> d(K + 1);  // (e^x - 1)/x = sum x^k/(k+1)!
    boost::multiprecision::cpp_int fact = 1;
    for (int k = 0; k <= K; ++k) {
        fact *= (k + 1);
        d[k] = Rational(1, fact);
    }
    std::vector<Rational> c(K + 1);  // reciprocal series
    c[0] = 1;
    for (int n = 1; n <= K; ++n) {
        Rational s = 0;
        for (int j = 1; j <= n; ++j) s += d[j] * c[n - j];
        c[n] = -s;
    }
    boost::multiprecision::cpp_int nf = 1;
    for (int n = 1; n <= K; ++n) {
        nf *= n;
        c[n] *= Rational(nf);
    }
    return c;
}

}  // namespace

TEST_CASE("bernoulli exact table") {
    CHECK(hz::bernoulli(0) == hz::Rational(1));
    CHECK(hz::bernoulli(1) == hz::Rational(-1, 2));
    CHECK(hz::bernoulli(4) == hz::Rational(-1, 30));
    CHECK(hz::bernoulli(3) == hz::Rational(0));
    CHECK_THROWS_AS(hz::bernoulli(41), hz::unsupported_error);

    auto oracle = bernoulli_by_series_division(40);
    for (int n = 0; n <= 40; ++n) CHECK(hz::bernoulli(n) == oracle[n]);
}

TEST_CASE("even zeta via bernoulli") {
    R pi = hz::pi_v<R>();
    CHECK(mp::abs(hz::even_zeta_via_bernoulli<R>(1) - pi * pi / 6) < R("1e-70"));
    CHECK(mp::abs(hz::even_zeta_via_bernoulli<R>(2) - mp::pow(pi, 4) / 90) < R("1e-70"));
    CHECK(mp::abs(hz::even_zeta_via_bernoulli<R>(3) - mp::pow(pi, 6) / 945) < R("1e-70"));
    CHECK(static_cast<double>(hz::even_zeta_via_bernoulli<R>(1)) == doctest::Approx(1.6449340668));
    CHECK(static_cast<double>(hz::even_zeta_via_bernoulli<R>(2)) == doctest::Approx(1.0823232337));
    CHECK(static_cast<double>(hz::even_zeta_via_bernoulli<R>(3)) == doctest::Approx(1.0173430619));
    CHECK_THROWS_AS(hz::even_zeta_via_bernoulli<R>(11), hz::unsupported_error);
}

TEST_CASE("root of unity exactness") {
    RootOfUnity w(6, 5);
    CHECK(w * w.inverse() == RootOfUnity::one());
    CHECK(w.inverse() == RootOfUnity(6, 1));
    CHECK(RootOfUnity(4, 2) == RootOfUnity(2, 1));
    CHECK((RootOfUnity(4, 1) * RootOfUnity(4, 1)) == RootOfUnity(2, 1));
    CHECK((RootOfUnity(3, 1) * RootOfUnity(2, 1)).order == 6);

    for (long N : {1L, 2L, 3L, 4L, 5L, 6L}) {
        for (long k = 0; k < N; ++k) {
            RootOfUnity r(N, k);
            C z = r.embed<R>();
            CHECK(hz::abs_d(hz::pow_int(z, r.order) - C(R(1))) < 1e-70);
        }
    }
    auto cyc = RootOfUnity(4, 1).power_cycle<R>();
    CHECK(hz::abs_d(cyc[1] - C(R(0), R(1))) < 1e-70);
    CHECK(hz::abs_d(cyc[3] - C(R(0), R(-1))) < 1e-70);
}

TEST_CASE("precision context invariants") {
    CHECK_THROWS_AS(hz::PrecisionContext(64, 1e-30), hz::spec_error);
    CHECK_NOTHROW(hz::PrecisionContext(256, 1e-30));
    CHECK_THROWS_AS(hz::PrecisionContext(256, -1.0), hz::spec_error);
}

TEST_CASE("hurwitz zeta against bracketing oracle") {
    auto c = ctx30();
    R pi = hz::pi_v<R>();

    // zeta(2;1) = pi^2/6
    CHECK(mp::abs(hz::hurwitz_zeta<R>(2, R(1), c) - pi * pi / 6) < R("1e-30"));

    // zeta(2;1/2) = pi^2/2, bracketed by partial sum + integral tail bounds
    {
        long K = 4000;
        R partial(0);
        for (long n = 0; n < K; ++n) partial += 1 / ((R(n) + R(1) / 2) * (R(n) + R(1) / 2));
        R lo = partial + 1 / (R(K) + R(1) / 2);
        R hi = partial + 1 / (R(K) - R(1) / 2);
        R got = hz::hurwitz_zeta<R>(2, R(1) / 2, c);
        CHECK(got >= lo);
        CHECK(got <= hi);
        CHECK(mp::abs(got - pi * pi / 2) < R("1e-30"));
        CHECK(static_cast<double>(got) == doctest::Approx(4.9348022005).epsilon(1e-9));
    }

    // zeta(3;1) = zeta(3), bracketed
    {
        long K = 3000;
        R partial(0);
        for (long n = 1; n <= K; ++n) partial += 1 / (R(n) * R(n) * R(n));
        R lo = partial + 1 / (2 * R(K + 1) * R(K + 1));
        R hi = partial + 1 / (2 * R(K) * R(K));
        R got = hz::hurwitz_zeta<R>(3, R(1), c);
        CHECK(got >= lo);
        CHECK(got <= hi);
        CHECK(static_cast<double>(got) == doctest::Approx(1.2020569032).epsilon(1e-9));
    }

    CHECK_THROWS_AS(hz::hurwitz_zeta<R>(2, R(-1), c), hz::domain_error);
}

TEST_CASE("hurwitz ladder property") {
    auto c = ctx30();
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(0.02, 3.0);
    for (int p = 2; p <= 4; ++p) {
        for (int rep = 0; rep < 12; ++rep) {
            R q(u(rng));
            R lhs = hz::hurwitz_zeta<R>(p, q, c) - hz::hurwitz_zeta<R>(p, q + 1, c);
            R rhs = mp::pow(q, -p);
            CHECK(mp::abs(lhs - rhs) < R("1e-29"));
        }
    }
}

TEST_CASE("digamma values and recurrence") {
    auto c = ctx30();
    R g = hz::euler_gamma_v<R>();
    check_close(hz::digamma(C(R(1)), c), C(-g), 1e-30, "psi(1)");
    check_close(hz::digamma(C(R(2)), c), C(R(1) - g), 1e-30, "psi(2)");
    check_close(hz::digamma(C(R(1) / 2), c), C(-g - 2 * hz::ln2_v<R>()), 1e-30, "psi(1/2)");

    // oracle: definition series for psi(1/2), telescoped pairing of
    // 1/k - 1/(k+1/2) = (1/2)/(k(k+1/2))
    {
        long K = 60000;
        R acc = -hz::euler_gamma_v<R>() - 2;
        for (long k = 1; k <= K; ++k) acc += (R(1) / 2) / (R(k) * (R(k) + R(1) / 2));
        CHECK(mp::abs(acc - hz::digamma(C(R(1) / 2), c).re) < R(1) / (2 * K) * 2);
    }

    std::mt19937_64 rng(999);
    std::uniform_real_distribution<double> ur(-20.0, 20.0);
    for (int i = 0; i < 100; ++i) {
        C s(R(ur(rng)), R(ur(rng)));
        if (hz::integer_lattice_distance(s, LONG_MIN, 0) < 1e-3) continue;
        C lhs = hz::digamma(s + C(R(1)), c) - hz::digamma(s, c);
        check_close(lhs, hz::reciprocal(s), 1e-29, "psi recurrence");
    }
    CHECK_THROWS_AS(hz::digamma(C(R(0)), c), hz::domain_error);
    CHECK_THROWS_AS(hz::digamma(C(R(-3) + R(1e-9)), c), hz::domain_error);
}

TEST_CASE("zeta jet sigma-derivatives vs brute force") {
    // Lambda_d = sum_{k>=0} ln^d(k+t) (k+t)^{-4}; jet coefficient c[d] must
    // equal (-1)^d Lambda_d / d!
    R t("0.7");
    double err = 0;
    auto jet = hz::hurwitz_zeta_jet<R>(4, C(t), 3, 1e-34, &err);
    CHECK(err < 1e-30);

    long K = 20000;
    R s0(0), s1(0), s2(0);
    for (long k = 0; k < K; ++k) {
        R base = t + k;
        R inv4 = mp::pow(base, -4);
        R L = mp::log(base);
        s0 += inv4;
        s1 += L * inv4;
        s2 += L * L * inv4;
    }
    // integral tail corrections: int_K^inf ln^d(x+t) (x+t)^-4 dx
    R TT = t + K;
    R LT = mp::log(TT);
    R i0 = mp::pow(TT, -3) / 3;
    R i1 = mp::pow(TT, -3) * (LT / 3 + R(1) / 9);
    R i2 = mp::pow(TT, -3) * (LT * LT / 3 + 2 * LT / 9 + R(2) / 27);
    s0 += i0;
    s1 += i1;
    s2 += i2;

    CHECK(mp::abs(jet.c[0].re - s0) < R("1e-12"));
    CHECK(mp::abs(-jet.c[1].re - s1) < R("1e-11"));
    CHECK(mp::abs(2 * jet.c[2].re - s2) < R("1e-10"));
    CHECK(hz::abs_d(jet.pole) == 0.0);
}

TEST_CASE("zeta jet pole structure at sigma0 = 1") {
    // alternating block combination: sum_{n>=0} (-1)^n (n+t)^{-1}
    //   = (1/2)[zeta(1, t/2) - zeta(1, (t+1)/2)] with the poles cancelling
    R t("0.6");
    double e1 = 0, e2 = 0;
    auto ja = hz::hurwitz_zeta_jet<R>(1, C(t / 2), 0, 1e-34, &e1);
    auto jb = hz::hurwitz_zeta_jet<R>(1, C((t + 1) / 2), 0, 1e-34, &e2);
    CHECK(hz::abs_d(ja.pole - jb.pole) < 1e-60);
    R combo = (ja.c[0].re - jb.c[0].re) / 2;
    R brute(0);
    long K = 200000;
    for (long n = 0; n + 1 < K; n += 2) brute += 1 / ((t + n) * (t + n + 1));
    brute += 1 / (2 * R(K));  // integral estimate of the paired tail
    CHECK(mp::abs(combo - brute) < R(8) / (R(K) * R(K)));
}
