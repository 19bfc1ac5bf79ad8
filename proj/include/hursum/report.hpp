#ifndef HURSUM_REPORT_HPP
#define HURSUM_REPORT_HPP

#include "identities.hpp"

#include <json.hpp>

#include <fstream>

namespace hursum {

using json = nlohmann::json;

inline const char* tool_version() { return "0.1.0"; }

// All knobs of a verification run. Round-trips losslessly through JSON so a
// config file can mirror every flag.
struct RunConfig {
    int precision_bits = 256;
    double target_tol = 1e-30;
    long max_terms = 4'000'000;
    unsigned long seed = 20240817;
    int jobs = 1;
    int max_points = 0;                // 0: per-identity defaults
    std::vector<std::string> suites;   // identity-name globs; empty = all
    std::string out_path = "hursum-report.json";
    std::string csv_path;
    bool check = false;

    json to_json() const {
        return json{{"precision_bits", precision_bits},
                    {"target_tol", target_tol},
                    {"max_terms", max_terms},
                    {"seed", seed},
                    {"jobs", jobs},
                    {"max_points", max_points},
                    {"suites", suites},
                    {"out", out_path},
                    {"csv", csv_path},
                    {"check", check}};
    }
    static RunConfig from_json(const json& j) {
        RunConfig c;
        c.precision_bits = j.value("precision_bits", c.precision_bits);
        c.target_tol = j.value("target_tol", c.target_tol);
        c.max_terms = j.value("max_terms", c.max_terms);
        c.seed = j.value("seed", c.seed);
        c.jobs = j.value("jobs", c.jobs);
        c.max_points = j.value("max_points", c.max_points);
        if (j.contains("suites")) c.suites = j["suites"].get<std::vector<std::string>>();
        c.out_path = j.value("out", c.out_path);
        c.csv_path = j.value("csv", c.csv_path);
        c.check = j.value("check", c.check);
        return c;
    }
};

// simple shell-style glob: '*' matches any run, '?' one character
inline bool glob_match(const std::string& pat, const std::string& s) {
    size_t p = 0, i = 0, star = std::string::npos, mark = 0;
    while (i < s.size()) {
        if (p < pat.size() && (pat[p] == '?' || pat[p] == s[i])) {
            ++p;
            ++i;
        } else if (p < pat.size() && pat[p] == '*') {
            star = p++;
            mark = i;
        } else if (star != std::string::npos) {
            p = star + 1;
            i = ++mark;
        } else {
            return false;
        }
    }
    while (p < pat.size() && pat[p] == '*') ++p;
    return p == pat.size();
}

inline json point_to_json(const ParamPoint& pt) {
    json args = json::array();
    for (const auto& r : pt.args) args.push_back(r.str());
    std::ostringstream re, imv;
    re << pt.a_re;
    imv << pt.a_im;
    return json{{"exponents", pt.exps}, {"args", args}, {"a_re", re.str()}, {"a_im", imv.str()}};
}

inline json record_to_json(const ResidualRecord& rec) {
    json j{{"identity", rec.id_name.empty() ? identity_name(rec.id) : rec.id_name},
           {"point", point_to_json(rec.point)},
           {"lhs", rec.lhs},
           {"rhs", rec.rhs},
           {"abs_err", rec.abs_err},
           {"rel_err", rec.rel_err},
           {"tol_used", rec.tol_used},
           {"status", status_name(rec.status)}};
    if (!rec.note.empty()) j["note"] = rec.note;
    if (!rec.convention.empty()) j["convention"] = rec.convention;
    return j;
}

struct SuiteResult {
    std::string name;
    std::vector<ResidualRecord> records;
    std::string convention;        // resolved convention for corollary suites
    double conv_label_err = -1;    // max abs_err seen per convention during resolution
    double conv_denom_err = -1;
    long wall_ms = 0;
};

struct Report {
    RunConfig config;
    std::vector<SuiteResult> suites;
    std::string stamp;  // the single timestamp+timing line; excluded from diffs

    json to_json() const {
        long pass = 0, fail = 0, skipped = 0;
        json jsuites = json::array();
        for (const auto& s : suites) {
            json recs = json::array();
            for (const auto& r : s.records) {
                recs.push_back(record_to_json(r));
                switch (r.status) {
                    case ResidualRecord::Status::Pass: ++pass; break;
                    case ResidualRecord::Status::Fail: ++fail; break;
                    default: ++skipped; break;
                }
            }
            json js{{"identity", s.name}, {"records", recs}};
            if (!s.convention.empty()) {
                js["convention"] = s.convention;
                js["convention_check"] = json{{"label_max_abs_err", s.conv_label_err},
                                              {"denominator_max_abs_err", s.conv_denom_err}};
            }
            jsuites.push_back(js);
        }
        return json{{"tool", "hursum"},
                    {"version", tool_version()},
                    {"run_stamp", stamp},
                    {"config", config.to_json()},
                    {"suites", jsuites},
                    {"summary", json{{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
    }

    long failures() const {
        long fail = 0;
        for (const auto& s : suites)
            for (const auto& r : s.records)
                if (r.status == ResidualRecord::Status::Fail) ++fail;
        return fail;
    }

    void write(const std::string& path) const {
        std::ofstream os(path);
        if (!os) throw spec_error("cannot open report path " + path);
        os << to_json().dump(2) << "\n";
    }

    void write_csv(const std::string& path) const {
        std::ofstream os(path);
        if (!os) throw spec_error("cannot open csv path " + path);
        os << "identity,convention,point,status,abs_err,rel_err,tol_used\n";
        for (const auto& s : suites)
            for (const auto& r : s.records) {
                std::string pt = r.point.str();
                for (auto& ch : pt)
                    if (ch == ',') ch = ';';
                os << (r.id_name.empty() ? identity_name(r.id) : r.id_name) << ","
                   << r.convention << "," << pt << ","
                   << status_name(r.status) << "," << r.abs_err << "," << r.rel_err << ","
                   << r.tol_used << "\n";
            }
    }
};

}  // namespace hursum

#endif
