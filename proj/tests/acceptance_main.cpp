// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance and runtime budget in code.

#include <hursum/harness.hpp>

#include <chrono>
#include <cstdio>
#include <random>

namespace hz = hursum;
using R = hz::real256;
using C = hz::Cx<R>;
namespace mp = hz::mp;

namespace {

int g_failures = 0;

struct Criterion {
    const char* name;
    double budget_s;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void finish(bool ok, const std::string& detail) {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = secs < budget_s;
        bool pass = ok && in_budget;
        if (!pass) ++g_failures;
        std::printf("%-22s %s  (%.1fs of %.0fs budget)  %s\n", name, pass ? "PASS" : "FAIL", secs,
                    budget_s, detail.c_str());
        std::fflush(stdout);
    }
};

std::vector<hz::RootOfUnity> all_roots() {
    std::vector<hz::RootOfUnity> roots = {hz::RootOfUnity::one()};
    for (long N : {2L, 3L, 4L, 6L})
        for (long k = 1; k < N; ++k)
            if (std::gcd(k, N) == 1) roots.emplace_back(N, k);
    return roots;
}

const std::vector<C>& shift_set() {
    static const std::vector<C> s = {C(R("0.3")), C(R("-0.4")), C(R("0.7")),
                                     C(R("0.25"), R("0.1")), C(R("-0.35"), R("0.2"))};
    return s;
}

// criterion 1: pi^2/6 calibration and the Bernoulli ladder at 256 bits
void calibration() {
    Criterion cr{"calibration", 1.0};
    hz::PrecisionContext ctx(256, 1e-28);
    R pi = hz::pi_v<R>();
    double worst = 0;
    worst = std::max(worst, hz::abs_d(hz::polylog<R>(2, hz::RootOfUnity::one(), ctx) -
                                      C(pi * pi / 6)));
    for (int m = 1; m <= 4; ++m) {
        C li = hz::polylog<R>(2 * m, hz::RootOfUnity::one(), ctx);
        worst = std::max(worst, hz::abs_d(li - C(hz::even_zeta_via_bernoulli<R>(m))));
    }
    std::ostringstream d;
    d << "max |error| = " << worst;
    cr.finish(worst <= 1e-25, d.str());
}

// criterion 2: accelerated evaluator vs 1e5-term brute force on seeded specs
void oracle_equivalence() {
    Criterion cr{"oracle-equivalence", 120.0};
    auto roots = all_roots();
    std::mt19937_64 rng(4242);
    hz::PrecisionContext ctx(256, 1e-18);
    int done = 0, ok = 0;
    double worst_gap = 0;
    while (done < 20) {
        long r = 1 + rng() % 2;
        hz::SumSpec<R> spec;
        spec.family = static_cast<hz::Family>(rng() % 3);
        long budget = 6;
        for (long j = 0; j < r; ++j) {
            long p = 1 + rng() % 3;
            spec.ps.push_back(p);
            spec.xs.push_back(roots[rng() % roots.size()]);
            budget -= p;
        }
        if (budget < 1) continue;
        spec.q = 1 + rng() % budget;
        spec.x = roots[rng() % roots.size()];
        spec.shift = shift_set()[rng() % 5];
        if (spec.q == 1 && spec.x.is_one()) continue;
        ++done;
        auto acc = hz::eval_euler_sum(spec, ctx);
        auto brute = hz::eval_euler_sum_bruteforce(spec, 100000, ctx);
        double gap = hz::abs_d(acc.value - brute.value);
        double budget_err = acc.error_estimate + brute.error_estimate;
        if (gap <= budget_err) ++ok;
        worst_gap = std::max(worst_gap, budget_err > 0 ? gap / budget_err : 0.0);
    }
    std::ostringstream d;
    d << ok << "/20 within bounds, worst gap/bound = " << worst_gap;
    cr.finish(ok == 20, d.str());
}

bool run_suite_group(const std::vector<hz::IdentityId>& ids, double tol, int min_points,
                     std::string& detail) {
    hz::RunConfig cfg;
    cfg.target_tol = 1e-32;
    bool ok = true;
    double worst = 0;
    std::ostringstream d;
    for (auto id : ids) {
        auto s = hz::run_identity_suite<R>(id, cfg);
        long pass = 0, fail = 0;
        double wmax = 0;
        for (const auto& rec : s.records) {
            if (rec.status == hz::ResidualRecord::Status::Pass) ++pass;
            if (rec.status == hz::ResidualRecord::Status::Fail) ++fail;
            wmax = std::max(wmax, rec.abs_err);
        }
        bool enough = pass >= min_points;
        bool in_tol = fail == 0 && wmax <= tol;
        if (!enough || !in_tol) {
            ok = false;
            d << " [" << hz::identity_name(id) << ": " << pass << " pts, max " << wmax << "]";
        }
        worst = std::max(worst, wmax);
        if (!s.convention.empty()) d << " " << hz::identity_name(id) << "=" << s.convention;
    }
    std::ostringstream out;
    out << "max |LHS-RHS| = " << worst << d.str();
    detail = out.str();
    return ok;
}

void linear_suites() {
    Criterion cr{"linear-parity", 300.0};
    std::string detail;
    bool ok = run_suite_group(
        {hz::IdentityId::Thm31, hz::IdentityId::Thm32, hz::IdentityId::Thm33,
         hz::IdentityId::Ex31a, hz::IdentityId::Ex31b, hz::IdentityId::Ex32a,
         hz::IdentityId::Ex32b, hz::IdentityId::Ex33a, hz::IdentityId::Ex33b},
        1e-10, 25, detail);
    cr.finish(ok, detail);
}

void quadratic_suites() {
    Criterion cr{"quadratic-parity", 900.0};
    std::string detail;
    bool ok = run_suite_group(
        {hz::IdentityId::Thm34, hz::IdentityId::Thm35, hz::IdentityId::Thm36,
         hz::IdentityId::Ex34a, hz::IdentityId::Ex34b, hz::IdentityId::Ex35a,
         hz::IdentityId::Ex35b, hz::IdentityId::Ex36a, hz::IdentityId::Ex36b},
        1e-10, 15, detail);
    cr.finish(ok, detail);
}

void corollary_suites() {
    Criterion cr{"corollary-suites", 1200.0};
    std::string d41, d42;
    bool ok41 = run_suite_group(
        {hz::IdentityId::Cor41, hz::IdentityId::Cor41Ex22, hz::IdentityId::Cor41Ex23}, 1e-8, 15,
        d41);
    bool ok42 =
        run_suite_group({hz::IdentityId::Cor42, hz::IdentityId::Cor42Ex212}, 1e-8, 8, d42);
    cr.finish(ok41 && ok42, d41 + " | " + d42);
}

// criterion 6: reduction trees match the direct parity combination and stay
// strictly below order 2
void reduction_engine() {
    Criterion cr{"reduction-engine", 600.0};
    auto roots = all_roots();
    std::mt19937_64 rng(777);
    hz::PrecisionContext ctx(256, 1e-13);
    int checked = 0, ok = 0;
    double worst = 0;
    for (hz::Family fam : {hz::Family::S, hz::Family::St, hz::Family::R}) {
        int done = 0;
        while (done < 10) {
            std::vector<long> ps = {static_cast<long>(1 + rng() % 2),
                                    static_cast<long>(1 + rng() % 2)};
            long q = 1 + rng() % 2;
            std::vector<hz::RootOfUnity> xs = {roots[rng() % roots.size()],
                                               roots[rng() % roots.size()]};
            hz::RootOfUnity outer = roots[rng() % roots.size()];
            if ((ps[0] == 1 && xs[0].is_one()) || (ps[1] == 1 && xs[1].is_one())) continue;
            if (q == 1 && outer.is_one()) continue;
            hz::Reduction red;
            try {
                red = hz::reduce_parity_combination(fam, ps, q, xs, outer);
            } catch (const hz::spec_error&) {
                continue;
            }
            if (red.lhs.divergent() || red.rhs.divergent()) continue;
            ++done;
            ++checked;
            C base = shift_set()[done % 5] + C(R(red.base_offset));
            hz::Evaluator<R> ev{base, ctx, {}, 0};
            double gap = hz::abs_d(ev.eval(red.lhs) - ev.eval(red.rhs));
            worst = std::max(worst, gap);
            if (gap <= 1e-10 && red.rhs.max_euler_order() < 2) ++ok;
        }
    }
    std::ostringstream d;
    d << ok << "/" << checked << " reductions, worst residual " << worst;
    cr.finish(ok == checked && checked == 30, d.str());
}

// criterion 7: lemma suites (slope grid, residue closed forms, contour decay)
void lemma_suites() {
    Criterion cr{"lemma-suites", 1500.0};
    hz::RunConfig cfg;
    auto suites = hz::run_lemma_suites<hz::real512>(cfg);
    long fail = 0, total = 0;
    std::ostringstream d;
    for (const auto& s : suites) {
        long sf = 0;
        for (const auto& rec : s.records) {
            ++total;
            if (rec.status != hz::ResidualRecord::Status::Pass) {
                ++sf;
                if (fail < 3) d << " [" << s.name << ": " << rec.note << "]";
            }
        }
        fail += sf;
    }
    std::ostringstream out;
    out << (total - fail) << "/" << total << " lemma checks" << d.str();
    cr.finish(fail == 0, out.str());
}

// criterion 8: depth-2 stuffle, 36 cases
void stuffle_suite() {
    Criterion cr{"stuffle-depth2", 300.0};
    const double tol = 1e-13;
    hz::PrecisionContext ctx(256, tol);
    std::vector<hz::RootOfUnity> fourth = {hz::RootOfUnity::one(), hz::RootOfUnity::minus_one(),
                                           hz::RootOfUnity::imag_i(), hz::RootOfUnity(4, 3)};
    std::mt19937_64 rng(11);
    int cases = 0, ok = 0;
    double worst = 0;
    for (long p = 1; p <= 3; ++p)
        for (long q = 1; q <= 3; ++q)
            for (const C& a : {C(R(0)), C(R("0.3"))}) {
                int picked = 0;
                while (picked < 2) {
                    hz::RootOfUnity x1 = fourth[rng() % 4], x2 = fourth[rng() % 4];
                    if ((p == 1 && x1.is_one()) || (q == 1 && x2.is_one())) continue;
                    ++picked;
                    ++cases;
                    C lhs = hz::hurwitz_polylog<R>(p, x1, a, ctx) *
                            hz::hurwitz_polylog<R>(q, x2, a, ctx);
                    C rhs = hz::eval_mpl(hz::MplSpec<R>{{p, q}, {x1, x2}, a}, ctx).value +
                            hz::eval_mpl(hz::MplSpec<R>{{q, p}, {x2, x1}, a}, ctx).value +
                            hz::hurwitz_polylog<R>(p + q, x1 * x2, a, ctx);
                    double gap = hz::abs_d(lhs - rhs);
                    worst = std::max(worst, gap);
                    if (gap <= 10 * tol) ++ok;
                }
            }
    std::ostringstream d;
    d << ok << "/" << cases << " cases, worst gap " << worst;
    cr.finish(ok == cases && cases == 36, d.str());
}

// criterion 9: two verify runs with the same config agree exactly
void determinism() {
    Criterion cr{"determinism", 300.0};
    hz::RunConfig cfg;
    cfg.max_points = 4;
    cfg.suites = {"Ex3.1a", "Cor4.1-Ex(2,2)"};
    auto run = [&] {
        hz::Report rep;
        rep.config = cfg;
        rep.stamp = "fixed";
        for (auto id : hz::select_identities(cfg.suites))
            rep.suites.push_back(hz::run_identity_suite<R>(id, cfg));
        auto j = rep.to_json();
        j.erase("run_stamp");
        return j.dump();
    };
    std::string a = run();
    std::string b = run();
    cr.finish(a == b, a == b ? "byte-identical apart from the stamp" : "reports differ");
}

}  // namespace

int main() {
    std::printf("hursum acceptance suite (version %s)\n", hz::tool_version());
    calibration();
    oracle_equivalence();
    linear_suites();
    quadratic_suites();
    corollary_suites();
    reduction_engine();
    lemma_suites();
    stuffle_suite();
    determinism();
    std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return g_failures == 0 ? 0 : 1;
}
