#ifndef HURSUM_HARNESS_HPP
#define HURSUM_HARNESS_HPP

#include "kernel_expansions.hpp"
#include "report.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace hursum {

namespace harness_detail {

// run fn(i) for i in [0, n) on up to `jobs` workers; results land by index,
// so the output ordering is independent of scheduling
template <class Fn>
void parallel_for(long n, int jobs, Fn&& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    int workers = static_cast<int>(std::min<long>(jobs, n));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

}  // namespace harness_detail

inline std::vector<IdentityId> select_identities(const std::vector<std::string>& globs) {
    std::vector<IdentityId> ids;
    for (const auto& [id, name] : identity_names()) {
        if (globs.empty()) {
            ids.push_back(id);
            continue;
        }
        for (const auto& g : globs)
            if (glob_match(g, name)) {
                ids.push_back(id);
                break;
            }
    }
    return ids;
}

// Runs one identity suite. For corollary ids the shift-label convention is
// resolved first: both readings are evaluated on a few admissible points and
// the suite then runs under the reading that zeroes the residual; the report
// carries both residual levels.
template <class Real>
SuiteResult run_identity_suite(IdentityId id, const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = identity_name(id);
    SuiteConfig scfg;
    scfg.seed = cfg.seed;
    scfg.max_points = cfg.max_points;
    SuitePoints pts = suite_points(id, scfg);
    PrecisionContext ctx(cfg.precision_bits, std::max(cfg.target_tol, 1e-32), cfg.max_terms);

    CorollaryConvention conv = CorollaryConvention::PaperLabel;
    if (identity_is_corollary(id) && !pts.points.empty()) {
        double label_err = 0, denom_err = 0;
        size_t probes = std::min<size_t>(2, pts.points.size());
        for (size_t i = 0; i < probes; ++i) {
            auto rl = identity_residual<Real>(id, pts.points[i], ctx,
                                              CorollaryConvention::PaperLabel);
            auto rd = identity_residual<Real>(id, pts.points[i], ctx,
                                              CorollaryConvention::DenominatorShift);
            label_err = std::max(label_err, rl.abs_err);
            denom_err = std::max(denom_err, rd.abs_err);
        }
        conv = label_err <= denom_err ? CorollaryConvention::PaperLabel
                                      : CorollaryConvention::DenominatorShift;
        out.convention = conv == CorollaryConvention::PaperLabel ? "label" : "denominator";
        out.conv_label_err = label_err;
        out.conv_denom_err = denom_err;
    }

    out.records.resize(pts.points.size());
    harness_detail::parallel_for(static_cast<long>(pts.points.size()), cfg.jobs, [&](long i) {
        out.records[i] = identity_residual<Real>(id, pts.points[i], ctx, conv);
    });
    auto t1 = std::chrono::steady_clock::now();
    out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return out;
}

// The kernel-expansion suites: truncation-order slopes on the default grid,
// residue closed forms against Richardson extrapolation, and the shrinking
// contour sums. Reported in the same record shape, one record per case.
template <class Real>
std::vector<SuiteResult> run_lemma_suites(const RunConfig& cfg) {
    std::vector<SuiteResult> out;
    PrecisionContext ctx(precision_bits_of<Real>, 1e-40, cfg.max_terms);
    Cx<Real> a(Real(3) / 10);

    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult s;
        s.name = "Lemma-expansion-slopes";
        auto grid = default_expansion_grid<Real>(a);
        s.records.resize(grid.size());
        harness_detail::parallel_for(static_cast<long>(grid.size()), cfg.jobs, [&](long i) {
            const auto& cs = grid[i];
            ResidualRecord rec;
            rec.id_name = "slope:" + cs.str();
            rec.tol_used = static_cast<double>(cs.K) + 0.9;
            double slope = expansion_slope(cs, ctx);
            rec.abs_err = slope;  // stored measure: fitted slope
            rec.rel_err = 0;
            rec.note = cs.str();
            rec.status = slope >= rec.tol_used ? ResidualRecord::Status::Pass
                                               : ResidualRecord::Status::Fail;
            rec.lhs = "slope";
            rec.rhs = std::to_string(slope);
            s.records[i] = rec;
        });
        auto t1 = std::chrono::steady_clock::now();
        s.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(s));
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult s;
        s.name = "Lemma-residue-closed-forms";
        std::mt19937_64 rng(cfg.seed);
        std::vector<RootOfUnity> roots = {RootOfUnity(2, 1), RootOfUnity(4, 1), RootOfUnity(3, 1),
                                          RootOfUnity(6, 1)};
        struct CaseDef {
            long p, q, n0;
            RootOfUnity x, y;
            Cx<Real> a;
        };
        std::vector<CaseDef> cases;
        while (cases.size() < 10) {
            CaseDef cd{static_cast<long>(1 + rng() % 2), static_cast<long>(1 + rng() % 2),
                       static_cast<long>(rng() % 5) - 2, roots[rng() % roots.size()],
                       roots[rng() % roots.size()],
                       Cx<Real>(Real(3) / 10, cases.size() % 2 ? Real(1) / 10 : Real(0))};
            cases.push_back(cd);
        }
        s.records.resize(cases.size());
        harness_detail::parallel_for(static_cast<long>(cases.size()), cfg.jobs, [&](long i) {
            const auto& cd = cases[i];
            ResidualRecord rec;
            rec.id_name = "residue-closed-form";
            rec.tol_used = 1e-6;
            auto num = numeric_integer_residue<Real>(cd.p, cd.q, cd.x, cd.y, cd.a, cd.n0,
                                                     ctx.with_tol(1e-30));
            auto cf = closed_form_integer_residue<Real>(cd.p, cd.q, cd.x, cd.y, cd.a, cd.n0,
                                                        ctx.with_tol(1e-30));
            rec.abs_err = abs_d(num - cf);
            rec.rel_err = rec.abs_err / std::max(1.0, abs_d(cf));
            rec.lhs = to_string(num, 18);
            rec.rhs = to_string(cf, 18);
            std::ostringstream note;
            note << "p=" << cd.p << " q=" << cd.q << " x=" << cd.x.str() << " y=" << cd.y.str()
                 << " n0=" << cd.n0;
            rec.note = note.str();
            rec.status = rec.abs_err <= rec.tol_used ? ResidualRecord::Status::Pass
                                                     : ResidualRecord::Status::Fail;
            s.records[i] = rec;
        });
        auto t1 = std::chrono::steady_clock::now();
        s.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(s));
    }

    {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult s;
        s.name = "Lemma-contour-decay";
        PrecisionContext rctx(256, 1e-20, cfg.max_terms);
        std::vector<long> ms = {5, 10, 20, 40};
        std::vector<double> mags(ms.size());
        Cx<real256> aa(real256(3) / 10);
        for (size_t i = 0; i < ms.size(); ++i) {
            auto v = residue_sum_check<real256>(2, 2, RootOfUnity(4, 1), RootOfUnity(2, 1), aa,
                                                ms[i], rctx);
            mags[i] = abs_d(v);
        }
        for (size_t i = 0; i < ms.size(); ++i) {
            ResidualRecord rec;
            rec.id_name = "contour-decay";
            rec.tol_used = i == ms.size() - 1 ? 1e-3 : 2.0 * (i ? mags[i - 1] : 1e9);
            rec.abs_err = mags[i];
            rec.note = "partial residue sum, m=" + std::to_string(ms[i]);
            bool ok = i + 1 == ms.size() ? (mags[i] < 1e-3 && mags[i] <= 2.0 * mags[i - 1])
                                         : (i == 0 || mags[i] <= 2.0 * mags[i - 1]);
            rec.status = ok ? ResidualRecord::Status::Pass : ResidualRecord::Status::Fail;
            s.records.push_back(rec);
        }
        auto t1 = std::chrono::steady_clock::now();
        s.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace hursum

#endif
