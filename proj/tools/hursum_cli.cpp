// hursum: evaluate Hurwitz-type cyclotomic Euler sums and multiple Hurwitz
// polylogarithms at roots of unity, verify the parity identities, and emit
// reduction trees.
//
// Subcommands: eval, verify, reduce, lemmas, sweep. See README.md.

#include <hursum/harness.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>

namespace hz = hursum;

namespace {

constexpr int EXIT_PARSE = 2;
constexpr int EXIT_DIVERGENT = 3;
constexpr int EXIT_NO_FORMULA = 4;

struct TokenError {
    size_t position;
    std::string message;
};

// root-of-unity token: 1 | -1 | i | -i | w N k (three tokens)
hz::RootOfUnity parse_root(const std::vector<std::string>& toks, size_t& i) {
    if (i >= toks.size()) throw TokenError{i, "expected root of unity"};
    const std::string& t = toks[i];
    if (t == "1") {
        ++i;
        return hz::RootOfUnity::one();
    }
    if (t == "-1") {
        ++i;
        return hz::RootOfUnity::minus_one();
    }
    if (t == "i") {
        ++i;
        return hz::RootOfUnity::imag_i();
    }
    if (t == "-i") {
        ++i;
        return hz::RootOfUnity(4, 3);
    }
    if (t == "w") {
        if (i + 2 >= toks.size()) throw TokenError{i, "w form needs order and index"};
        long N = 0, k = 0;
        try {
            N = std::stol(toks[i + 1]);
            k = std::stol(toks[i + 2]);
        } catch (...) {
            throw TokenError{i + 1, "w form needs integer order and index"};
        }
        if (N <= 0) throw TokenError{i + 1, "root order must be positive"};
        i += 3;
        return hz::RootOfUnity(N, k);
    }
    throw TokenError{i, "unrecognized root token '" + t + "'"};
}

long parse_posint(const std::vector<std::string>& toks, size_t& i, const char* what) {
    if (i >= toks.size()) throw TokenError{i, std::string("expected ") + what};
    try {
        size_t used = 0;
        long v = std::stol(toks[i], &used);
        if (used != toks[i].size() || v < 1) throw TokenError{i, std::string("bad ") + what};
        ++i;
        return v;
    } catch (const TokenError&) {
        throw;
    } catch (...) {
        throw TokenError{i, std::string("expected integer ") + what};
    }
}

// complex literal: RE, REi, RE+IMi, RE-IMi, optionally prefixed a=
template <class Real>
hz::Cx<Real> parse_complex(const std::vector<std::string>& toks, size_t& i) {
    if (i >= toks.size()) throw TokenError{i, "expected shift/complex literal"};
    std::string t = toks[i];
    if (t.rfind("a=", 0) == 0) t = t.substr(2);
    if (t.empty()) throw TokenError{i, "empty complex literal"};
    try {
        std::string re = t, im = "0";
        if (t.back() == 'i') {
            std::string body = t.substr(0, t.size() - 1);
            // split at the last +/- not at position 0
            size_t split = std::string::npos;
            for (size_t k = body.size(); k-- > 1;) {
                if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
                    body[k - 1] != 'E') {
                    split = k;
                    break;
                }
            }
            if (split == std::string::npos) {
                re = "0";
                im = body.empty() ? "1" : body;
            } else {
                re = body.substr(0, split);
                im = body.substr(split);
                if (im == "+" || im == "-") im += "1";
            }
        }
        ++i;
        return {Real(re.c_str()), Real(im.c_str())};
    } catch (...) {
        throw TokenError{i, "malformed complex literal '" + toks[i] + "'"};
    }
}

std::string format_result_line(const std::string& value, double err, long terms) {
    std::ostringstream os;
    os << "value = " << value << "\n";
    os << "error_estimate = " << err << "\n";
    os << "terms_used = " << terms << "\n";
    return os.str();
}

template <class Real>
int do_eval(const std::vector<std::string>& toks, const hz::RunConfig& cfg) {
    hz::PrecisionContext ctx(cfg.precision_bits, cfg.target_tol, cfg.max_terms);
    size_t i = 0;
    if (toks.empty()) throw TokenError{0, "empty expression"};
    const std::string head = toks[i++];
    long wcount = 0;
    for (const auto& t : toks) wcount += (t == "w");
    if (head == "li") {
        long p = parse_posint(toks, i, "exponent");
        hz::RootOfUnity x = parse_root(toks, i);
        auto v = hz::polylog<Real>(p, x, ctx);
        std::cout << format_result_line(hz::to_string(v, 31), ctx.target_tol, 0);
        return 0;
    }
    if (head == "hli") {
        long p = parse_posint(toks, i, "exponent");
        hz::RootOfUnity x = parse_root(toks, i);
        auto a = parse_complex<Real>(toks, i);
        auto v = hz::hurwitz_polylog<Real>(p, x, a, ctx);
        std::cout << format_result_line(hz::to_string(v, 31), ctx.target_tol, 0);
        return 0;
    }
    if (head == "sum") {
        if (i >= toks.size()) throw TokenError{i, "expected family S|St|R"};
        std::string fam = toks[i++];
        hz::Family f;
        if (fam == "S") f = hz::Family::S;
        else if (fam == "St") f = hz::Family::St;
        else if (fam == "R") f = hz::Family::R;
        else throw TokenError{i - 1, "unknown family '" + fam + "'"};
        long rest = static_cast<long>(toks.size() - i);
        long r = (rest - 3 - 2 * wcount) / 2;
        if (r < 1 || r > 3 || 2 * r + 3 + 2 * wcount != rest)
            throw TokenError{i, "sum needs p_1..p_r q x_1..x_r x a"};
        hz::SumSpec<Real> spec;
        spec.family = f;
        for (long j = 0; j < r; ++j) spec.ps.push_back(parse_posint(toks, i, "inner exponent"));
        spec.q = parse_posint(toks, i, "outer exponent");
        for (long j = 0; j < r; ++j) spec.xs.push_back(parse_root(toks, i));
        spec.x = parse_root(toks, i);
        spec.shift = parse_complex<Real>(toks, i);
        // conditionally convergent outermost index: slower default tolerance
        if (spec.q == 1 && cfg.target_tol < 1e-15) ctx.target_tol = 1e-15;
        auto res = hz::eval_euler_sum(spec, ctx);
        std::cout << format_result_line(hz::to_string(res.value, 31), res.error_estimate,
                                        res.terms_used);
        return 0;
    }
    if (head == "mpl") {
        long rest = static_cast<long>(toks.size() - i);
        long r = (rest - 1 - 2 * wcount) / 2;
        if (r < 1 || r > 3 || 2 * r + 1 + 2 * wcount != rest)
            throw TokenError{i, "mpl needs k_1..k_r x_1..x_r a"};
        hz::MplSpec<Real> spec;
        for (long j = 0; j < r; ++j) spec.ks.push_back(parse_posint(toks, i, "exponent"));
        for (long j = 0; j < r; ++j) spec.xs.push_back(parse_root(toks, i));
        spec.shift = parse_complex<Real>(toks, i);
        if (spec.ks.back() == 1 && cfg.target_tol < 1e-15) ctx.target_tol = 1e-15;
        auto res = hz::eval_mpl(spec, ctx);
        std::cout << format_result_line(hz::to_string(res.value, 31), res.error_estimate,
                                        res.terms_used);
        return 0;
    }
    if (head == "phi") {
        long p = parse_posint(toks, i, "exponent");
        auto s = parse_complex<Real>(toks, i);
        hz::RootOfUnity x = parse_root(toks, i);
        auto v = hz::lerch_phi_deriv<Real>(p, s, x, ctx);
        std::cout << format_result_line(hz::to_string(v, 31), ctx.target_tol, 0);
        return 0;
    }
    if (head == "Phi") {
        auto s = parse_complex<Real>(toks, i);
        hz::RootOfUnity x = parse_root(toks, i);
        auto v = hz::ext_trig<Real>(s, x, ctx);
        std::cout << format_result_line(hz::to_string(v, 31), ctx.target_tol, 0);
        return 0;
    }
    throw TokenError{0, "unknown function '" + head + "'"};
}

template <class Real>
int do_reduce(const std::vector<std::string>& toks, const hz::RunConfig& cfg) {
    size_t i = 0;
    if (toks.empty()) throw TokenError{0, "expected family S|St|R"};
    std::string fam = toks[i++];
    hz::Family f;
    if (fam == "S") f = hz::Family::S;
    else if (fam == "St") f = hz::Family::St;
    else if (fam == "R") f = hz::Family::R;
    else throw TokenError{0, "unknown family '" + fam + "'"};
    long wcount = 0;
    for (const auto& t : toks) wcount += (t == "w");
    long rest = static_cast<long>(toks.size() - i);
    long r = (rest - 3 - 2 * wcount) / 2;
    if (r < 1 || 2 * r + 3 + 2 * wcount != rest)
        throw TokenError{i, "reduce needs p_1..p_r q x_1..x_r x a=..."};
    if (r > 2) {
        std::cerr << "no explicit formula in source for order " << r << "\n";
        return EXIT_NO_FORMULA;
    }
    std::vector<long> ps;
    for (long j = 0; j < r; ++j) ps.push_back(parse_posint(toks, i, "inner exponent"));
    long q = parse_posint(toks, i, "outer exponent");
    std::vector<hz::RootOfUnity> xs;
    for (long j = 0; j < r; ++j) xs.push_back(parse_root(toks, i));
    hz::RootOfUnity outer = parse_root(toks, i);
    auto shift = parse_complex<Real>(toks, i);

    auto red = hz::reduce_parity_combination(f, ps, q, xs, outer);
    std::cout << "parity combination (base shift b = a" << (red.base_offset >= 0 ? "+" : "")
              << red.base_offset << "):\n";
    std::cout << "  LHS = " << red.lhs.canonical().str() << "\n";
    std::cout << "  RHS = " << red.rhs.canonical().str() << "\n";
    std::cout << "max Euler order in RHS: " << red.rhs.max_euler_order() << "\n";
    if (cfg.check) {
        hz::PrecisionContext ctx(cfg.precision_bits, std::min(cfg.target_tol, 1e-13),
                                 cfg.max_terms);
        hz::Cx<Real> base = shift + hz::Cx<Real>(Real(red.base_offset));
        hz::Evaluator<Real> ev{base, ctx, {}, 0};
        auto l = ev.eval(red.lhs);
        auto rr = ev.eval(red.rhs);
        std::cout << "LHS value  = " << hz::to_string(l, 25) << "\n";
        std::cout << "tree value = " << hz::to_string(rr, 25) << "\n";
        std::cout << "residual   = " << hz::abs_d(l - rr) << "\n";
    }
    return 0;
}

std::string now_stamp() {
    std::time_t t = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

template <class Real>
int do_verify(hz::RunConfig cfg, bool lemmas_only) {
    for (const auto& g : cfg.suites) {
        bool any = false;
        for (const auto& [id, name] : hz::identity_names())
            if (hz::glob_match(g, name)) any = true;
        if (!any && !lemmas_only) {
            std::cerr << "unknown identity glob '" << g << "'\n";
            return EXIT_PARSE;
        }
    }
    hz::Report report;
    report.config = cfg;
    if (lemmas_only) {
        auto suites = hz::run_lemma_suites<Real>(cfg);
        for (auto& s : suites) report.suites.push_back(std::move(s));
    } else {
        for (hz::IdentityId id : hz::select_identities(cfg.suites))
            report.suites.push_back(hz::run_identity_suite<Real>(id, cfg));
    }
    std::ostringstream timing;
    timing << now_stamp();
    for (const auto& s : report.suites) timing << " " << s.name << "=" << s.wall_ms << "ms";
    report.stamp = timing.str();
    report.write(cfg.out_path);
    if (!cfg.csv_path.empty()) report.write_csv(cfg.csv_path);
    long pass = 0, fail = 0, skip = 0;
    for (const auto& s : report.suites) {
        long sp = 0, sf = 0, sk = 0;
        for (const auto& r : s.records) {
            if (r.status == hz::ResidualRecord::Status::Pass) ++sp;
            else if (r.status == hz::ResidualRecord::Status::Fail) ++sf;
            else ++sk;
        }
        std::printf("%-28s %4ld pass %4ld fail %4ld skipped", s.name.c_str(), sp, sf, sk);
        if (!s.convention.empty()) std::printf("  convention=%s", s.convention.c_str());
        std::printf("\n");
        pass += sp;
        fail += sf;
        skip += sk;
    }
    std::printf("total: %ld pass, %ld fail, %ld skipped -> %s\n", pass, fail, skip,
                cfg.out_path.c_str());
    return fail == 0 ? 0 : 1;
}

int do_sweep(const hz::RunConfig& cfg) {
    for (hz::IdentityId id : hz::select_identities(cfg.suites)) {
        hz::SuiteConfig scfg;
        scfg.seed = cfg.seed;
        scfg.max_points = cfg.max_points;
        auto pts = hz::suite_points(id, scfg);
        std::printf("%s: %zu admissible, %zu filtered\n", hz::identity_name(id).c_str(),
                    pts.points.size(), pts.rejected.size());
        for (const auto& p : pts.points) std::printf("  + %s\n", p.str().c_str());
        for (const auto& [p, why] : pts.rejected)
            std::printf("  - %s   [%s]\n", p.str().c_str(), why.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    // configuration file: --config beats HURSUM_CONFIG beats ./hursum.config.json
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    if (config_path.empty()) {
        if (const char* env = std::getenv("HURSUM_CONFIG")) config_path = env;
    }
    if (config_path.empty()) {
        std::ifstream probe("hursum.config.json");
        if (probe) config_path = "hursum.config.json";
    }
    hz::RunConfig cfg;
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) {
            std::cerr << "cannot open config file " << config_path << "\n";
            return EXIT_PARSE;
        }
        try {
            hz::json j;
            is >> j;
            cfg = hz::RunConfig::from_json(j);
        } catch (const std::exception& e) {
            std::cerr << "bad config file: " << e.what() << "\n";
            return EXIT_PARSE;
        }
    }

    CLI::App app{"Hurwitz-type cyclotomic Euler sums: evaluation and parity verification"};
    app.require_subcommand(1);
    std::string config_dummy;
    app.add_option("--config", config_dummy, "configuration file (JSON)");
    app.add_option("--precision-bits", cfg.precision_bits, "working precision (<= 512)");
    app.add_option("--tol", cfg.target_tol, "target tolerance for evaluations");
    app.add_option("--max-terms", cfg.max_terms, "series length cap");
    app.add_option("--seed", cfg.seed, "sampling seed");
    app.add_option("--jobs", cfg.jobs, "parallel workers for suites");
    app.add_option("--out", cfg.out_path, "report output path");
    app.add_option("--csv", cfg.csv_path, "also write a CSV record table");
    app.add_option("--suite", cfg.suites, "identity-name globs (repeatable)");
    app.add_option("--max-points", cfg.max_points, "points per suite (0: defaults)");
    app.add_flag("--check", cfg.check, "numerically check reduce output");

    // eval and reduce consume raw tokens (arguments may look like flags,
    // e.g. -1); global options go before the subcommand
    auto* c_eval = app.add_subcommand("eval", "evaluate one function or sum");
    c_eval->prefix_command();
    auto* c_verify = app.add_subcommand("verify", "run identity suites and write a report");
    auto* c_reduce = app.add_subcommand("reduce", "print the parity reduction tree of a sum");
    c_reduce->prefix_command();
    auto* c_lemmas = app.add_subcommand("lemmas", "run the expansion/residue lemma suites");
    auto* c_sweep = app.add_subcommand("sweep", "print suite grids without evaluating");

    CLI11_PARSE(app, argc, argv);
    std::vector<std::string> expr = c_eval->remaining();
    std::vector<std::string> rexpr = c_reduce->remaining();

    if (cfg.precision_bits > 512) {
        std::cerr << "precision beyond 512 bits is not supported\n";
        return EXIT_PARSE;
    }
    bool wide = cfg.precision_bits > 256;

    try {
        if (c_eval->parsed())
            return wide ? do_eval<hz::real512>(expr, cfg) : do_eval<hz::real256>(expr, cfg);
        if (c_reduce->parsed())
            return wide ? do_reduce<hz::real512>(rexpr, cfg) : do_reduce<hz::real256>(rexpr, cfg);
        if (c_verify->parsed())
            return wide ? do_verify<hz::real512>(cfg, false) : do_verify<hz::real256>(cfg, false);
        if (c_lemmas->parsed()) return do_verify<hz::real512>(cfg, true);
        if (c_sweep->parsed()) return do_sweep(cfg);
    } catch (const TokenError& te) {
        std::cerr << "parse error at token " << te.position << ": " << te.message << "\n";
        return EXIT_PARSE;
    } catch (const hz::divergence_error& de) {
        std::cerr << "divergent: " << de.what() << "\n";
        return EXIT_DIVERGENT;
    } catch (const hz::unsupported_error& ue) {
        std::cerr << ue.what() << "\n";
        return EXIT_NO_FORMULA;
    } catch (const hz::spec_error& se) {
        std::cerr << "spec error: " << se.what() << "\n";
        return EXIT_PARSE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return EXIT_PARSE;
}
