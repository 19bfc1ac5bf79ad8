#include <hursum/euler_sums.hpp>

#include "test_util.hpp"

#include <random>

using namespace tu;
namespace hz = hursum;
namespace mp = hursum::mp;

using Spec = hz::SumSpec<R>;
using Mpl = hz::MplSpec<R>;

namespace {

Spec make_spec(hz::Family f, std::vector<long> ps, long q, std::vector<RootOfUnity> xs,
               RootOfUnity x, C a) {
    Spec s;
    s.family = f;
    s.ps = std::move(ps);
    s.q = q;
    s.xs = std::move(xs);
    s.x = x;
    s.shift = a;
    return s;
}

}  // namespace

TEST_CASE("linear euler sum 2 zeta(3)") {
    auto c = ctx(1e-20);
    Spec s = make_spec(hz::Family::S, {1}, 2, {one()}, one(), C(R(0)));
    auto res = hz::eval_euler_sum(s, c);
    // brute-force oracle with monotone tail estimate
    auto brute = hz::eval_euler_sum_bruteforce(s, 200000, c);
    CHECK(adiff(res.value, brute.value) <= res.error_estimate + brute.error_estimate);
    CHECK(static_cast<double>(res.value.re) == doctest::Approx(2.4041138063).epsilon(1e-9));
    // identity 2 zeta(3) against the zeta evaluator
    R want = 2 * hz::hurwitz_zeta<R>(3, R(1), ctx30());
    CHECK(mp::abs(res.value.re - want) < R(1e-18));
    CHECK(res.accelerated);
    CHECK(res.error_estimate <= 1e-20);
}

TEST_CASE("families coincide at a = 0") {
    auto c = ctx(1e-18);
    std::mt19937_64 rng(2024);
    std::vector<RootOfUnity> roots;
    for (long N : {1L, 2L, 3L, 4L, 6L})
        for (long k = 0; k < N; ++k) roots.emplace_back(N, k);
    int done = 0;
    while (done < 10) {
        long r = 1 + rng() % 2;
        std::vector<long> ps;
        std::vector<RootOfUnity> xs;
        for (long j = 0; j < r; ++j) {
            ps.push_back(1 + rng() % 3);
            xs.push_back(roots[rng() % roots.size()]);
        }
        long q = 1 + rng() % 3;
        RootOfUnity x = roots[rng() % roots.size()];
        if (q == 1 && x.is_one()) continue;
        Spec sS = make_spec(hz::Family::S, ps, q, xs, x, C(R(0)));
        Spec sSt = sS;
        sSt.family = hz::Family::St;
        Spec sR = sS;
        sR.family = hz::Family::R;
        auto vS = hz::eval_euler_sum(sS, c);
        auto vSt = hz::eval_euler_sum(sSt, c);
        auto vR = hz::eval_euler_sum(sR, c);
        INFO(sS.str());
        CHECK(adiff(vS.value, vSt.value) < 1e-16);
        CHECK(adiff(vS.value, vR.value) < 1e-16);
        ++done;
    }
}

TEST_CASE("accelerated matches brute force across families and shifts") {
    auto c = ctx(1e-18);
    std::vector<Spec> specs = {
        make_spec(hz::Family::S, {2}, 2, {mone()}, mone(), C(R("0.3"))),
        make_spec(hz::Family::S, {1}, 1, {im()}, mone(), C(R("0.3"))),
        make_spec(hz::Family::St, {2}, 2, {im()}, RootOfUnity(3, 1), C(R("-0.4"))),
        make_spec(hz::Family::St, {1, 2}, 1, {mone(), im()}, im(), C(R("0.25"), R("0.1"))),
        make_spec(hz::Family::R, {3}, 1, {RootOfUnity(6, 1)}, mone(), C(R("0.7"))),
        make_spec(hz::Family::R, {1, 1}, 2, {im(), mone()}, one(), C(R("0.25"), R("0.1"))),
        make_spec(hz::Family::S, {1}, 2, {one()}, mone(), C(R("-0.4"))),   // harmonic inner
        make_spec(hz::Family::S, {1, 1}, 2, {one(), one()}, mone(), C(R("0.3"))),  // two harmonic
        make_spec(hz::Family::R, {1}, 3, {one()}, one(), C(R("0.3"))),     // harmonic, w = 1
        make_spec(hz::Family::S, {2, 1, 1}, 2, {mone(), im(), one()}, im(), C(R("0.3"))),  // r=3
    };
    for (const auto& s : specs) {
        INFO(s.str());
        auto acc = hz::eval_euler_sum(s, c);
        auto brute = hz::eval_euler_sum_bruteforce(s, 100000, c);
        CHECK(adiff(acc.value, brute.value) <= acc.error_estimate + brute.error_estimate);
    }
}

TEST_CASE("error estimate monotone in max_terms") {
    Spec s = make_spec(hz::Family::S, {2}, 2, {mone()}, im(), C(R("0.3")));
    hz::PrecisionContext c1(256, 1e-20, 5000);
    hz::PrecisionContext c2(256, 1e-20, 500000);
    auto r1 = hz::eval_euler_sum(s, c1);
    auto r2 = hz::eval_euler_sum(s, c2);
    CHECK(r2.error_estimate <= r1.error_estimate);
}

TEST_CASE("mpl depth 1 equals hurwitz polylog") {
    auto c = ctx(1e-25);
    C a(R("0.25"), R("0.1"));
    Mpl m{{3}, {im()}, a};
    auto res = hz::eval_mpl(m, c);
    check_close(res.value, hz::hurwitz_polylog<R>(3, im(), a, ctx30()), 1e-25, "depth 1");
}

TEST_CASE("mpl depth 2: zeta(1,2) = zeta(3)") {
    auto c = ctx(1e-18);
    Mpl m{{1, 2}, {one(), one()}, C(R(0))};
    auto res = hz::eval_mpl(m, c);
    // brute-force double-sum oracle: zeta(1,2) = sum_{n1<n2} 1/(n1 n2^2)
    C brute = hz::eval_mpl_bruteforce(m, 40000);
    // tail ~ ln(K)/K
    CHECK(adiff(res.value, brute) < 2.0 * std::log(40000.0) / 40000.0);
    CHECK(static_cast<double>(res.value.re) == doctest::Approx(1.2020569032).epsilon(1e-9));
    R want = hz::hurwitz_zeta<R>(3, R(1), ctx30());
    CHECK(mp::abs(res.value.re - want) < R(1e-17));
}

TEST_CASE("mpl depth 2 vs brute force, twisted") {
    auto c = ctx(1e-18);
    C a(R("0.3"));
    Mpl m{{2, 1}, {im(), mone()}, a};
    auto res = hz::eval_mpl(m, c);
    // brute tail for the q = 1 outer index decays like |L1|/(2K)
    C brute = hz::eval_mpl_bruteforce(m, 300000);
    CHECK(adiff(res.value, brute) < 3e-6);
    Mpl m2{{1, 2}, {mone(), im()}, a};
    auto res2 = hz::eval_mpl(m2, c);
    C brute2 = hz::eval_mpl_bruteforce(m2, 300000);
    CHECK(adiff(res2.value, brute2) < 1e-8);
}

TEST_CASE("stuffle instance at depth 2") {
    auto c = ctx(1e-20);
    C a(R("0.25"));
    auto ctx_h = ctx30();
    C lhs = hz::hurwitz_polylog<R>(2, im(), a, ctx_h) * hz::hurwitz_polylog<R>(2, mone(), a, ctx_h);
    C rhs = hz::eval_mpl(Mpl{{2, 2}, {im(), mone()}, a}, c).value +
            hz::eval_mpl(Mpl{{2, 2}, {mone(), im()}, a}, c).value +
            hz::hurwitz_polylog<R>(4, mim(), a, ctx_h);
    CHECK(adiff(lhs, rhs) < 1e-19);
}

TEST_CASE("depth 3 stuffle consistency") {
    // Li_a(x;sh) * Li_{b,c}(y,z;sh) = Li_{a,b,c}(x,y,z) + Li_{b,a,c}(y,x,z)
    //   + Li_{b,c,a}(y,z,x) + Li_{a+b,c}(xy,z) + Li_{b,a+c}(y,xz)
    auto c = ctx(1e-16);
    C sh(R("0.3"));
    struct CaseDef {
        long ka, kb, kc;
        RootOfUnity x, y, z;
    };
    for (const auto& cs : {CaseDef{2, 1, 2, im(), mone(), im()},
                           CaseDef{1, 2, 2, mone(), im(), RootOfUnity(3, 1)},
                           CaseDef{1, 1, 2, mone(), one(), mone()},
                           CaseDef{2, 1, 2, mone(), one(), im()}}) {
        auto ctx_h = ctx30();
        C lhs = hz::hurwitz_polylog<R>(cs.ka, cs.x, sh, ctx_h) *
                hz::eval_mpl(Mpl{{cs.kb, cs.kc}, {cs.y, cs.z}, sh}, c).value;
        C rhs = hz::eval_mpl(Mpl{{cs.ka, cs.kb, cs.kc}, {cs.x, cs.y, cs.z}, sh}, c).value +
                hz::eval_mpl(Mpl{{cs.kb, cs.ka, cs.kc}, {cs.y, cs.x, cs.z}, sh}, c).value +
                hz::eval_mpl(Mpl{{cs.kb, cs.kc, cs.ka}, {cs.y, cs.z, cs.x}, sh}, c).value +
                hz::eval_mpl(Mpl{{cs.ka + cs.kb, cs.kc}, {cs.x * cs.y, cs.z}, sh}, c).value +
                hz::eval_mpl(Mpl{{cs.kb, cs.ka + cs.kc}, {cs.y, cs.x * cs.z}, sh}, c).value;
        INFO("k = (" << cs.ka << "," << cs.kb << "," << cs.kc << ")");
        CHECK(adiff(lhs, rhs) < 1e-14);
    }
}

TEST_CASE("mpl depth 3 vs brute force") {
    auto c = ctx(1e-14);
    C a(R("0.3"));
    Mpl m{{1, 2, 2}, {mone(), im(), mone()}, a};
    auto res = hz::eval_mpl(m, c);
    C brute = hz::eval_mpl_bruteforce(m, 200000);
    CHECK(adiff(res.value, brute) < 1e-8);
}

TEST_CASE("spec validation errors") {
    auto c = ctx(1e-18);
    Spec bad = make_spec(hz::Family::S, {1}, 1, {mone()}, one(), C(R("0.3")));
    CHECK_THROWS_AS(hz::eval_euler_sum(bad, c), hz::divergence_error);
    Spec poles = make_spec(hz::Family::S, {1}, 2, {mone()}, one(), C(R(-2) + R(1e-9)));
    CHECK_THROWS_AS(hz::eval_euler_sum(poles, c), hz::domain_error);
    Mpl badm{{2, 1}, {im(), one()}, C(R("0.3"))};
    CHECK_THROWS_AS(hz::eval_mpl(badm, c), hz::divergence_error);
}
