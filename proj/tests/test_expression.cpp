#include <hursum/expression.hpp>

#include "test_util.hpp"

using namespace tu;
namespace hz = hursum;
using hz::AffineShift;
using hz::Coef;
using hz::Expr;

TEST_CASE("coef and affine shift arithmetic") {
    Coef c1(hz::Rational(3, 2), im());
    Coef c2(hz::Rational(-2), mone());
    Coef p = c1 * c2;
    CHECK(p.rat == hz::Rational(-3));
    CHECK(p.root == mim());

    AffineShift s = AffineShift::minus_base_plus(1);  // 1 - a
    C a(R("0.3"));
    CHECK(adiff(s.value(a), C(R("0.7"))) < 1e-70);
    CHECK(s.str() == "-a+1");
    CHECK(AffineShift::base_plus(-1).str() == "a-1");
    // paper label "a" means denominator shift a-1
    Expr e = Expr::hli_label(2, im(), AffineShift::base());
    CHECK(e.shift == AffineShift::base_plus(-1));
}

TEST_CASE("tree evaluation with memoization") {
    // pi^2/6 - (1/2) Li_2(-1) * 2 as a tree
    Expr tree = Expr::sum();
    tree.add(Coef(1), Expr::li(2, one()));
    tree.add(Coef(hz::Rational(-1)), Expr::li(2, mone()));
    hz::Evaluator<R> ev{C(R("0.3")), ctx30(), {}, 0};
    C got = ev.eval(tree);
    R pi = hz::pi_v<R>();
    // Li_2(1) - Li_2(-1) = pi^2/6 + pi^2/12 = pi^2/4
    check_close(got, C(pi * pi / 4), 1e-29, "tree");
    CHECK(ev.memo.size() == 2);
    (void)ev.eval(tree);
    CHECK(ev.memo.size() == 2);
}

TEST_CASE("structural accessors") {
    Expr t = Expr::sum();
    t.add(Coef(1), Expr::euler(hz::Family::R, {2, 1}, 2, {im(), mone()}, one(),
                               AffineShift::base()));
    t.add(Coef(1), Expr::mpl_den({1, 2, 2}, {one(), im(), mone()}, AffineShift::base()));
    CHECK(t.max_euler_order() == 2);
    CHECK(t.max_mpl_depth() == 3);
    CHECK(t.contains_family(hz::Family::R));
    CHECK(!t.contains_family(hz::Family::St));
    CHECK(t.term_count() == 2);
    CHECK(!t.divergent());
    Expr bad = Expr::sum();
    bad.add(Coef(1), Expr::li(1, one()));
    CHECK(bad.divergent());
}

TEST_CASE("canonical printing sorts terms") {
    Expr t = Expr::sum();
    t.add(Coef(1), Expr::li(3, im()));
    t.add(Coef(1), Expr::li(2, im()));
    Expr c = t.canonical();
    CHECK(c.terms[0].factors[0].ps[0] == 2);
    CHECK(t.str().find("Li_3(i)") != std::string::npos);
}

TEST_CASE("linear bridge: S = Li*_{p,q} + Li*_{p+q}") {
    auto c = ctx(1e-16);
    C a(R("0.3"));
    // (p,q) = (1,2), x1 = x = 1: 2 zeta(3) = zeta(1,2) + zeta(3)
    {
        Expr tree = hz::linear_sum_to_mpl(1, 2, one(), one(), AffineShift::zero());
        CHECK(tree.term_count() == 2);
        CHECK(tree.terms[0].factors[0].ps.size() + tree.terms[1].factors[0].ps.size() == 3);
        hz::Evaluator<R> ev{C(R(0)), c, {}, 0};
        C got = ev.eval(tree);
        hz::SumSpec<R> s;
        s.family = hz::Family::S;
        s.ps = {1};
        s.q = 2;
        s.xs = {one()};
        s.x = one();
        s.shift = C(R(0));
        auto direct = hz::eval_euler_sum(s, c);
        CHECK(adiff(got, direct.value) < 1e-14);
    }
    // (p,q) = (2,2), x1 = x = -1, a = 0.3
    {
        Expr tree = hz::linear_sum_to_mpl(2, 2, mone(), mone(), AffineShift::base());
        hz::Evaluator<R> ev{a, c, {}, 0};
        C got = ev.eval(tree);
        hz::SumSpec<R> s;
        s.family = hz::Family::S;
        s.ps = {2};
        s.q = 2;
        s.xs = {mone()};
        s.x = mone();
        s.shift = a;
        auto direct = hz::eval_euler_sum(s, c);
        CHECK(adiff(got, direct.value) < 1e-14);
    }
}

TEST_CASE("quadratic bridge structure and value") {
    auto c = ctx(1e-14);
    C a(R("0.25"), R("0.1"));
    Expr tree = hz::quadratic_sum_to_mpl(2, 2, 2, mone(), im(), mim(), AffineShift::base());
    // the four summands of the bridge: depth 3, depth 2, and two products
    REQUIRE(tree.term_count() == 4);
    CHECK(tree.terms[0].factors[0].ps.size() == 3);
    CHECK(tree.terms[1].factors[0].ps.size() == 2);
    CHECK(tree.terms[2].factors.size() == 2);
    CHECK(tree.terms[3].factors.size() == 2);
    CHECK(tree.max_mpl_depth() == 3);
    hz::Evaluator<R> ev{a, c, {}, 0};
    C got = ev.eval(tree);
    hz::SumSpec<R> s;
    s.family = hz::Family::S;
    s.ps = {2, 2};
    s.q = 2;
    s.xs = {mone(), im()};
    s.x = mim();
    s.shift = a;
    auto direct = hz::eval_euler_sum(s, c);
    CHECK(adiff(got, direct.value) < 1e-12);
    CHECK_THROWS_AS(hz::quadratic_sum_to_mpl(1, 1, 2, one(), one(), one(), AffineShift::base()),
                    hz::spec_error);
}
