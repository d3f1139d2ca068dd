#include "etgrs/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "etgrs/etgrs.hpp"
#include "etgrs/nongrs.hpp"

namespace etgrs {

namespace {

using nlohmann::json;

std::vector<FieldElement> parse_list(const FieldSpec& spec, const std::string& text) {
    std::vector<FieldElement> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(parse_element(spec, tok));
    }
    return out;
}

uint64_t default_budget() {
    if (const char* env = std::getenv("ETGRS_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return (uint64_t)v;
    }
    return kDefaultBudget;
}

std::string join_values(const std::vector<FieldElement>& xs, char sep = ' ') {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += xs[i].to_string();
    }
    return s;
}

std::string witness_text(const std::vector<size_t>& idx) {
    std::string s = "{";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i] + 1);
    }
    return s + "}";
}

struct CommonArgs {
    std::string field;
    size_t n = 0, k = 0;
    std::string alpha, v;
    std::string eta, delta;
    uint64_t budget = 0;

    EtgrsParams to_params() const {
        const FieldSpec& spec = FieldSpec::parse(field);
        auto a = parse_list(spec, alpha);
        auto vv = v.empty() ? std::vector<FieldElement>{} : parse_list(spec, v);
        return EtgrsParams::make(spec, n, k, std::move(a), std::move(vv), parse_element(spec, eta),
                                 parse_element(spec, delta));
    }
};

void add_common(CLI::App* cmd, CommonArgs& c, bool with_pair) {
    cmd->add_option("--field", c.field, "field: p, p^m, or p^m:c0,...,cm")->required();
    cmd->add_option("--n", c.n, "number of evaluation points")->required();
    cmd->add_option("--k", c.k, "code dimension")->required();
    cmd->add_option("--alpha", c.alpha, "comma-separated evaluation points")->required();
    cmd->add_option("--v", c.v, "comma-separated column multipliers (default all ones)");
    if (with_pair) {
        cmd->add_option("--eta", c.eta, "twist coefficient (nonzero)")->required();
        cmd->add_option("--delta", c.delta, "tail coefficient")->required();
    }
    cmd->add_option("--budget", c.budget, "enumeration budget (default ETGRS_BUDGET or 2^24)");
}

json condition_json(const ConditionReport& c) {
    json j{{"id", c.id}, {"holds", c.holds}, {"via", c.via}, {"narrow_formula_agrees", c.narrow_formula_agrees}};
    if (c.witness) {
        json w = json::array();
        for (size_t i : *c.witness) w.push_back(i + 1);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json report_json(const ClassificationReport& rep, const std::optional<NonGrsReport>& schur,
                 const std::optional<json>& timings) {
    json params{{"field", rep.params.spec->to_string()},
                {"n", rep.params.n},
                {"k", rep.params.k},
                {"eta", rep.params.eta.value()},
                {"delta", rep.params.delta.value()}};
    params["alpha"] = json::array();
    for (const auto& a : rep.params.alpha) params["alpha"].push_back(a.value());
    params["v"] = json::array();
    for (const auto& x : rep.params.v) params["v"].push_back(x.value());

    json verdicts;
    verdicts["theorem"] = rep.theorem_verdict ? json(to_string(*rep.theorem_verdict)) : json(nullptr);
    verdicts["brute"] = rep.brute_verdict ? json(to_string(*rep.brute_verdict)) : json(nullptr);
    verdicts["agreement"] = rep.agreement;

    json code{{"length", rep.length}, {"dimension", rep.params.k}};
    code["d"] = rep.d ? json(*rep.d) : json(nullptr);
    code["d_dual"] = rep.d_dual ? json(*rep.d_dual) : json(nullptr);

    json conditions = json::array();
    json witnesses = json::array();
    auto push_conditions = [&](const std::vector<ConditionReport>& cs) {
        for (const auto& c : cs) {
            conditions.push_back(condition_json(c));
            if (c.witness) {
                json w = json::array();
                for (size_t i : *c.witness) w.push_back(i + 1);
                witnesses.push_back(json{{"id", c.id}, {"subset", w}});
            }
        }
    };
    push_conditions(rep.mds_conditions);
    push_conditions(rep.amds_conditions);
    if (rep.dual_report) {
        push_conditions(rep.dual_report->cases);
        conditions.push_back(json{{"id", "dual.k-1-independence"},
                                  {"holds", rep.dual_report->all_k_minus_1_independent},
                                  {"via", "rank"},
                                  {"narrow_formula_agrees", true},
                                  {"witness", nullptr}});
    }

    json findings = json::array();
    for (const auto& f : rep.findings) findings.push_back(json{{"tag", f.tag}, {"detail", f.detail}});

    json schur_json(nullptr);
    if (schur) {
        schur_json = json{{"regime", to_string(schur->regime)},
                          {"certified", schur->certified},
                          {"note", schur->note}};
        schur_json["schur_dim"] = schur->schur_dim ? json(*schur->schur_dim) : json(nullptr);
        schur_json["grs_expected"] = schur->grs_expected ? json(*schur->grs_expected) : json(nullptr);
        for (const auto& f : schur->findings) findings.push_back(json{{"tag", f.tag}, {"detail", f.detail}});
    }

    return json{{"params", params},   {"verdicts", verdicts}, {"code", code},       {"conditions", conditions},
                {"witnesses", witnesses}, {"schur", schur_json},  {"findings", findings}, {"timings", timings ? *timings : json(nullptr)}};
}

std::string verdict_block(const ClassificationReport& rep) {
    const Verdict v = rep.theorem_verdict ? *rep.theorem_verdict : *rep.brute_verdict;
    std::string s = to_string(v) + " [" + std::to_string(rep.length) + "," + std::to_string(rep.params.k);
    if (rep.d) s += "," + std::to_string(*rep.d);
    s += "]";
    return s;
}

void print_report(const ClassificationReport& rep, const std::optional<NonGrsReport>& schur, std::ostream& out) {
    out << "field: " << rep.params.spec->to_string() << "\n";
    out << "n: " << rep.params.n << "  k: " << rep.params.k << "  N: " << rep.length << "\n";
    out << "alpha: " << join_values(rep.params.alpha) << "\n";
    out << "v: " << join_values(rep.params.v) << "\n";
    out << "eta: " << rep.params.eta.to_string() << "  delta: " << rep.params.delta.to_string() << "\n";
    if (rep.theorem_verdict) out << "theorem verdict: " << to_string(*rep.theorem_verdict) << "\n";
    if (rep.brute_verdict) {
        out << "brute verdict: " << to_string(*rep.brute_verdict) << "  d=" << *rep.d;
        if (rep.d_dual) out << "  d_dual=" << *rep.d_dual;
        out << "\n";
        out << "agreement: " << (rep.agreement ? "yes" : "NO") << "\n";
    }
    out << "verdict: " << verdict_block(rep) << "\n";
    if (!rep.mds_conditions.empty()) {
        out << "conditions:\n";
        auto print_cs = [&](const std::vector<ConditionReport>& cs) {
            for (const auto& c : cs) {
                out << "  " << c.id << ": " << (c.holds ? "holds" : "fails");
                if (c.witness) out << "  witness " << witness_text(*c.witness);
                out << "\n";
            }
        };
        print_cs(rep.mds_conditions);
        print_cs(rep.amds_conditions);
        if (rep.dual_report) {
            print_cs(rep.dual_report->cases);
            out << "  dual.k-1-independence: " << (rep.dual_report->all_k_minus_1_independent ? "holds" : "fails");
            if (rep.dual_report->deficient_columns)
                out << "  columns " << witness_text(*rep.dual_report->deficient_columns);
            out << "\n";
            out << "dual AMDS: " << (rep.dual_report->holds ? "yes" : "no") << "\n";
        }
    }
    if (schur) {
        out << "schur: regime=" << to_string(schur->regime) << " certified=" << (schur->certified ? "yes" : "no");
        if (schur->schur_dim) out << " dim=" << *schur->schur_dim;
        if (schur->grs_expected) out << " grs_expected=" << *schur->grs_expected;
        out << "\n";
    }
    if (!rep.findings.empty()) {
        out << "findings:\n";
        for (const auto& f : rep.findings) out << "  - " << f.tag << ": " << f.detail << "\n";
    }
}

int cmd_classify(const CommonArgs& c, const std::string& mode_str, const std::string& format, bool with_schur,
                 bool with_timings, std::ostream& out) {
    const Mode mode = mode_str == "theorems" ? Mode::Theorems : mode_str == "brute" ? Mode::Brute : Mode::Both;
    const auto params = c.to_params();
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = classify_full(params, mode, c.budget);
    const auto t1 = std::chrono::steady_clock::now();
    std::optional<NonGrsReport> schur;
    if (with_schur) schur = certify_c(params);

    if (format == "json") {
        std::optional<json> timings;
        if (with_timings)
            timings = json{{"classify_ms", std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()}};
        out << report_json(rep, schur, timings).dump(2) << "\n";
    } else {
        print_report(rep, schur, out);
    }
    return rep.agreement ? 0 : 2;
}

struct SearchArgs {
    CommonArgs common;
    std::string etas, deltas;
    std::string only;
    bool dual_amds = false;
    bool brute = false;
    unsigned workers = 1;
    std::string format = "table";
};

int cmd_search(const SearchArgs& s, std::ostream& out) {
    const FieldSpec& spec = FieldSpec::parse(s.common.field);
    std::vector<FieldElement> etas, deltas;
    if (s.etas == "all") {
        for (const auto& e : enumerate_elements(spec))
            if (!e.is_zero()) etas.push_back(e);
    } else {
        etas = parse_list(spec, s.etas);
    }
    if (s.deltas == "all") {
        deltas = enumerate_elements(spec);
    } else {
        deltas = parse_list(spec, s.deltas);
    }
    auto alpha = parse_list(spec, s.common.alpha);
    auto v = s.common.v.empty() ? std::vector<FieldElement>{} : parse_list(spec, s.common.v);

    const auto rows = search(spec, s.common.n, s.common.k, std::move(alpha), std::move(v), etas, deltas, s.brute,
                             s.common.budget, s.workers);

    size_t shown = 0, dual_true = 0, disagreements = 0;
    std::ostringstream body;
    for (const auto& r : rows) {
        if (r.dual_amds) ++dual_true;
        if (r.brute_verdict && !r.agreement) ++disagreements;
        if (!s.only.empty() && to_string(r.verdict) != s.only) continue;
        ++shown;
        body << r.eta.to_string() << " " << r.delta.to_string() << " " << to_string(r.verdict) << " dual="
             << (r.dual_amds ? "yes" : "no");
        if (r.brute_verdict) body << " brute=" << to_string(*r.brute_verdict) << (r.agreement ? "" : " DISAGREE");
        body << "\n";
    }
    out << "eta delta verdict dual" << (s.brute ? " brute" : "") << "\n";
    out << body.str();
    out << "rows: " << shown << "/" << rows.size() << "\n";
    if (s.dual_amds) out << "dual AMDS: " << dual_true << "/" << rows.size() << "\n";
    return disagreements == 0 ? 0 : 2;
}

int cmd_matrix(const CommonArgs& c, const std::string& which, std::ostream& out) {
    const auto params = c.to_params();
    if (which == "G") {
        out << generator_matrix(params).to_text();
    } else if (which == "G1") {
        out << punctured_code(params).generator().to_text();
    } else if (which == "t") {
        const auto ext = extension_vector(params);
        out << join_values(ext.t) << "\n";
        out << "contract: " << (ext.formula_matched_contract ? "ok" : "ok (solved; closed formula missed)") << "\n";
    } else if (which == "dual") {
        const LinearCode code = etgrs_code(params);
        const LinearCode d = dual(code);
        out << d.generator().to_text();
        const FieldMatrix prod = matmul(code.generator(), transpose(d.generator()));
        bool all_zero = true;
        for (size_t r = 0; r < prod.rows(); ++r)
            for (size_t cc = 0; cc < prod.cols(); ++cc)
                if (prod.raw(r, cc) != 0) all_zero = false;
        out << "check G.H^T = 0: " << (all_zero ? "ok" : "FAILED") << "\n";
    } else if (which == "schur-square") {
        const auto [dim, gen] = schur_dim_profile(etgrs_code(params));
        out << gen.to_text();
        out << "dimension: " << dim << "\n";
    } else {
        throw CLI::ValidationError("--which", "expected one of G, G1, t, dual, schur-square");
    }
    return 0;
}

// ---- bundled reference cases with their expected outcomes ----

struct Claim {
    std::string text;
    bool pass;
    std::string computed;
};

int cmd_reproduce(int case_id, uint64_t budget, std::ostream& out) {
    std::vector<Claim> claims;
    std::vector<std::string> notes;

    if (case_id == 1) {
        const FieldSpec& spec = FieldSpec::get(13);
        auto params = EtgrsParams::make(spec, 5, 3, parse_list(spec, "1,2,5,6,7"), {}, FieldElement(spec, 9),
                                        FieldElement(spec, 9));
        const auto rep = classify_full(params, Mode::Both, budget);
        const bool pass = rep.brute_verdict == Verdict::Mds && rep.d == 6 && rep.theorem_verdict == Verdict::Mds &&
                          rep.agreement;
        std::string computed = to_string(*rep.brute_verdict) + " [8,3," + std::to_string(*rep.d) + "]" +
                               (rep.d_dual ? ", d_dual=" + std::to_string(*rep.d_dual) : "") +
                               ", theorem=" + to_string(*rep.theorem_verdict) +
                               ", agreement=" + (rep.agreement ? "yes" : "no");
        claims.push_back({"(eta,delta)=(9,9) gives MDS [8,3,6]", pass, computed});
        if (!pass)
            notes.push_back("reference case 1 does not reproduce: the computed classification is " + computed +
                            "; the reference MDS claim fails (columns {1,6,8} of G are dependent).");
    } else if (case_id == 2) {
        const FieldSpec& spec = FieldSpec::get(2, 3);
        const FieldElement g = primitive_element(spec);
        for (int t = 1; t <= 6; ++t) {
            auto params = EtgrsParams::make(spec, 4, 4, parse_list(spec, "1,g^3,g^5,g^6"), {}, g.pow(t), one(spec));
            const auto rep = classify_full(params, Mode::Both, budget);
            const bool pass = rep.brute_verdict == Verdict::Mds && rep.d == 4 && rep.agreement;
            claims.push_back({"(eta,delta)=(g^" + std::to_string(t) + ",1) gives MDS [7,4,4]", pass,
                              to_string(*rep.brute_verdict) + " [7,4," + std::to_string(*rep.d) + "]"});
        }
    } else if (case_id == 3) {
        const FieldSpec& spec = FieldSpec::get(2, 3);
        const FieldElement g = primitive_element(spec);
        auto elem = [&](int t) { return t < 0 ? zero(spec) : g.pow(t); };  // -1 encodes 0
        const std::vector<std::pair<int, int>> pairs = {
            {2, -1}, {2, 0}, {2, 2}, {2, 3}, {2, 4}, {2, 5},           // eta=g^2
            {4, -1}, {4, 1}, {4, 3}, {4, 4}, {4, 6},                   // eta=g^4
            {5, -1}, {5, 0}, {5, 1}, {5, 3}, {5, 4},                   // eta=g^5
            {6, -1}, {6, 0}, {6, 2}, {6, 4}, {6, 5}, {6, 6},           // eta=g^6
        };
        for (const auto& [te, td] : pairs) {
            auto params = EtgrsParams::make(spec, 5, 3, parse_list(spec, "1,g,g^2,g^4,g^5"), {}, elem(te), elem(td));
            const auto rep = classify_full(params, Mode::Both, budget);
            const bool pass = rep.d == 5 && rep.d_dual == 3 && rep.brute_verdict == Verdict::Nmds && rep.agreement;
            claims.push_back({"(eta,delta)=(g^" + std::to_string(te) + "," + (td < 0 ? "0" : "g^" + std::to_string(td)) +
                                  ") gives AMDS [8,3,5] (NMDS)",
                              pass,
                              to_string(*rep.brute_verdict) + " d=" + std::to_string(*rep.d) +
                                  (rep.d_dual ? " d_dual=" + std::to_string(*rep.d_dual) : "")});
        }
    } else if (case_id == 4) {
        const FieldSpec& spec = FieldSpec::get(11);
        size_t computed_dual_dim = 0;
        for (uint32_t eta = 1; eta <= 10; ++eta) {
            for (uint32_t dl = 0; dl <= 10; ++dl) {
                auto params = EtgrsParams::make(spec, 5, 3, parse_list(spec, "0,4,5,8,9"), {},
                                                FieldElement(spec, eta), FieldElement(spec, dl));
                const auto dual_rep = check_dual_amds(params);
                const LinearCode dual_code = dual(etgrs_code(params));
                computed_dual_dim = dual_code.dimension();
                const size_t dd = min_distance(dual_code, budget);
                const bool pass = dual_rep.holds && dd == 3;
                claims.push_back({"(eta,delta)=(" + std::to_string(eta) + "," + std::to_string(dl) +
                                      "): dual is AMDS [8,5,3]",
                                  pass, std::string("dual d=") + std::to_string(dd) +
                                            ", conditions=" + (dual_rep.holds ? "hold" : "fail")});
            }
        }
        notes.push_back("reference lists the dual parameters as [8,4,4]; the dual of an [8,3] code has dimension " +
                        std::to_string(computed_dual_dim) + ", computed dual parameters are [8," +
                        std::to_string(computed_dual_dim) + ",3] for delta != 0 - recorded deviation.");
    } else {
        throw CLI::ValidationError("case", "expected 1, 2, 3 or 4");
    }

    size_t passed = 0;
    for (size_t i = 0; i < claims.size(); ++i) {
        const auto& c = claims[i];
        if (c.pass) ++passed;
        out << "claim " << (i + 1) << ": " << c.text << ": " << (c.pass ? "PASS" : "FAIL") << "  (computed: "
            << c.computed << ")\n";
    }
    out << "passed " << passed << "/" << claims.size() << "\n";
    for (const auto& n : notes) out << "note: " << n << "\n";
    return passed == claims.size() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construction and classification tool for extended twisted generalized Reed-Solomon codes"};
    app.require_subcommand(1);

    CommonArgs cls_args;
    std::string cls_mode = "both", cls_format = "table";
    bool cls_schur = false, cls_timings = false;
    auto* cls = app.add_subcommand("classify", "classify one (eta, delta) instance");
    add_common(cls, cls_args, true);
    cls->add_option("--mode", cls_mode, "theorems|brute|both (default both)")
        ->check(CLI::IsMember({"theorems", "brute", "both"}));
    cls->add_option("--format", cls_format, "table|json")->check(CLI::IsMember({"table", "json"}));
    cls->add_flag("--schur", cls_schur, "include the Schur-product (non-GRS) summary");
    cls->add_flag("--timings", cls_timings, "include timings in JSON output");

    SearchArgs sargs;
    auto* srch = app.add_subcommand("search", "classify a sweep of (eta, delta) pairs");
    add_common(srch, sargs.common, false);
    srch->add_option("--etas", sargs.etas, "comma-separated etas, or 'all' (nonzero)")->required();
    srch->add_option("--deltas", sargs.deltas, "comma-separated deltas, or 'all'")->required();
    srch->add_option("--only", sargs.only, "filter rows by verdict")
        ->check(CLI::IsMember({"MDS", "AMDS", "NMDS", "OTHER"}));
    srch->add_flag("--dual-amds", sargs.dual_amds, "print the dual-AMDS tally");
    srch->add_flag("--brute", sargs.brute, "confirm each pair by brute force");
    srch->add_option("--workers", sargs.workers, "worker threads (output is identical for any count)");

    int repro_case = 0;
    uint64_t repro_budget = 0;
    auto* rep = app.add_subcommand("reproduce", "run a bundled reference case and compare");
    rep->add_option("case", repro_case, "reference case id (1-4)")->required();
    rep->add_option("--budget", repro_budget, "enumeration budget");

    CommonArgs m_args;
    std::string which = "G";
    auto* mat = app.add_subcommand("matrix", "print construction matrices and vectors");
    add_common(mat, m_args, true);
    mat->add_option("--which", which, "G|G1|t|dual|schur-square")->required();

    std::vector<const char*> argv;
    argv.push_back("etgrs");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const uint64_t fallback = default_budget();
        if (cls->parsed()) {
            if (cls_args.budget == 0) cls_args.budget = fallback;
            return cmd_classify(cls_args, cls_mode, cls_format, cls_schur, cls_timings, out);
        }
        if (srch->parsed()) {
            if (sargs.common.budget == 0) sargs.common.budget = fallback;
            return cmd_search(sargs, out);
        }
        if (rep->parsed()) {
            return cmd_reproduce(repro_case, repro_budget == 0 ? fallback : repro_budget, out);
        }
        if (mat->parsed()) {
            if (m_args.budget == 0) m_args.budget = fallback;
            return cmd_matrix(m_args, which, out);
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace etgrs
