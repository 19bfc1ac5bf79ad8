#include <hursum/kernel_expansions.hpp>

#include "test_util.hpp"

#include <random>

using namespace tu;
namespace hz = hursum;
namespace mp = hursum::mp;

using R5 = hz::real512;
using C5 = hz::Cx<R5>;

namespace {
hz::PrecisionContext kctx() { return {512, 1e-40}; }
}  // namespace

TEST_CASE("expansion residual: L2.3 example at x=i, n=0, K=6") {
    hz::ExpansionCase<R5> cs{hz::LemmaCase::L23, 1, im(), C5{}, 0, 6};
    C5 s(R5(1) / 10);
    R5 r = hz::expansion_residual(cs, s, kctx());
    // order-of-magnitude bound |Li_8-scale| * 0.1^7
    CHECK(static_cast<double>(r) < 1e-6);
    CHECK(static_cast<double>(r) > 1e-10);  // the next coefficient is nonzero
}

TEST_CASE("expansion residual: L2.4-pos one-term oracle") {
    // K = 0 at s = n + eps: residual equals |first omitted term| to first order
    C5 a(R5("0.3"));
    hz::ExpansionCase<R5> cs{hz::LemmaCase::L24Pos, 1, mone(), a, 1, 0};
    C5 s(R5("1.05"));
    R5 r = hz::expansion_residual(cs, s, kctx());
    // first omitted term: x^{-n-1} * (k=1 coefficient) * (s-n)
    auto c = kctx();
    C5 coef = C5(R5(-1)) * (hz::hurwitz_polylog<R5>(2, mone(), a - C5(R5(1)), c) -
                            hz::finite_sum<R5>(1, 2, mone(), a - C5(R5(1))));
    double first = hz::abs_d(hz::pow_int(mone().embed<R5>(), -2) * coef * C5(R5("0.05")));
    CHECK(std::abs(static_cast<double>(r) - first) < 0.2 * first);
}

TEST_CASE("expansion slope test on a sampled grid") {
    C5 a(R5("0.3"));
    auto grid = hz::default_expansion_grid<R5>(a);
    // exercise a deterministic subsample here; the full grid runs in the
    // acceptance suite
    std::mt19937_64 rng(42);
    std::shuffle(grid.begin(), grid.end(), rng);
    int tested = 0;
    for (const auto& cs : grid) {
        if (tested >= 12) break;
        double slope = hz::expansion_slope(cs, kctx());
        INFO(cs.str());
        CHECK(slope >= static_cast<double>(cs.K) + 0.9);
        ++tested;
    }
}

TEST_CASE("residue closed forms match numeric residues") {
    auto c = kctx();
    std::mt19937_64 rng(7);
    std::vector<RootOfUnity> roots = {mone(), im(), RootOfUnity(3, 1), RootOfUnity(6, 1)};
    int done = 0;
    while (done < 10) {
        long p = 1 + rng() % 2;
        long q = 1 + rng() % 2;
        RootOfUnity x = roots[rng() % roots.size()];
        RootOfUnity y = roots[rng() % roots.size()];
        C5 a(R5("0.3"), R5(done % 2 ? "0.1" : "0"));
        long n0 = static_cast<long>(rng() % 5) - 2;
        auto num = hz::numeric_integer_residue<R5>(p, q, x, y, a, n0, c.with_tol(1e-30));
        auto cf = hz::closed_form_integer_residue<R5>(p, q, x, y, a, n0, c.with_tol(1e-30));
        INFO("p=" << p << " q=" << q << " x=" << x.str() << " y=" << y.str() << " n0=" << n0);
        CHECK(hz::abs_d(num - cf) < 1e-6);
        ++done;
    }
}

TEST_CASE("residue partial sums decay over growing contours") {
    auto c = tu::ctx(1e-20);
    C a(R("0.3"));
    std::vector<double> mags;
    for (long m : {5L, 10L, 20L, 40L}) {
        C s = hz::residue_sum_check<R>(2, 2, im(), mone(), a, m, c);
        mags.push_back(adiff(s, C{}));
    }
    CHECK(mags[3] < mags[0]);
    CHECK(mags[3] < 1e-3);
    for (size_t i = 0; i + 1 < mags.size(); ++i) CHECK(mags[i + 1] <= 2.0 * mags[i]);
}

TEST_CASE("degenerate contour retries with an offset") {
    auto c = tu::ctx(1e-20);
    // a = 1/2 puts -n-a exactly on the half-integer contour; the check must
    // shift the square and still produce a decaying partial sum
    C a(R(1) / 2, R(0));
    C s5 = hz::residue_sum_check<R>(2, 2, im(), mone(), a, 5, c);
    C s40 = hz::residue_sum_check<R>(2, 2, im(), mone(), a, 40, c);
    CHECK(adiff(s40, C{}) < adiff(s5, C{}));
}
