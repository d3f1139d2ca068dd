// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line with supporting detail. Exits nonzero if any
// criterion fails. Criteria that repeat a bundled reference claim are
// evaluated exactly as stated; when the computed ground truth contradicts
// the reference, the criterion fails loudly and the detail lines give the
// verified truth (see the project README for the two known deviations).

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "etgrs/cli.hpp"
#include "etgrs/etgrs.hpp"
#include "etgrs/nongrs.hpp"
#include "oracles.hpp"

using namespace etgrs;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;
    void fail(const std::string& msg) {
        pass = false;
        details.push_back(msg);
    }
    void note(const std::string& msg) { details.push_back(msg); }
};

std::vector<FieldElement> elems(const FieldSpec& f, std::initializer_list<uint32_t> vals) {
    std::vector<FieldElement> out;
    for (uint32_t v : vals) out.emplace_back(f, v);
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- shared randomized instance suite (criteria 5 and 7) ----

struct InstanceResult {
    std::string desc;
    bool verdicts_agree = false;
    bool extension_ok = false;
};

const std::vector<InstanceResult>& instance_suite() {
    static const std::vector<InstanceResult> results = [] {
        std::vector<InstanceResult> out;
        std::mt19937 rng(20250811);
        const std::vector<const FieldSpec*> fields = {&FieldSpec::get(7), &FieldSpec::get(2, 3),
                                                      &FieldSpec::get(3, 2), &FieldSpec::get(11),
                                                      &FieldSpec::get(13)};
        for (int i = 0; i < 200; ++i) {
            const FieldSpec& f = *fields[i % fields.size()];
            std::uniform_int_distribution<size_t> dk(3, 5);
            const size_t k = std::min<size_t>(dk(rng), std::min<size_t>(5, std::min<size_t>(7, f.q())));
            std::uniform_int_distribution<size_t> dn(k, std::min<size_t>(7, f.q()));
            const size_t n = dn(rng);
            auto alpha = oracles::random_distinct(f, n, rng);
            std::vector<FieldElement> v;
            for (size_t j = 0; j < n; ++j) v.push_back(oracles::random_nonzero(f, rng));
            auto params = EtgrsParams::make(f, n, k, std::move(alpha), std::move(v),
                                            oracles::random_nonzero(f, rng), oracles::random_element(f, rng));
            InstanceResult r;
            std::ostringstream desc;
            desc << "q=" << f.q() << " n=" << n << " k=" << k << " eta=" << params.eta.to_string()
                 << " delta=" << params.delta.to_string();
            r.desc = desc.str();

            const auto rep = classify_full(params, Mode::Both, 1ull << 28);
            r.verdicts_agree = rep.agreement;

            const auto ext = extension_vector(params);
            const FieldMatrix G = generator_matrix(params);
            r.extension_ok = ext.formula_matched_contract &&
                             extend(punctured_code(params), ext.t).generator() == G;
            out.push_back(std::move(r));
        }
        return out;
    }();
    return results;
}

// ---- criteria ----

Outcome criterion1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const FieldSpec& f = FieldSpec::get(13);
    auto params = EtgrsParams::make(f, 5, 3, elems(f, {1, 2, 5, 6, 7}), {}, FieldElement(f, 9), FieldElement(f, 9));
    const auto rep = classify_full(params, Mode::Both);
    const double secs = seconds_since(t0);
    const bool claim = rep.brute_verdict == Verdict::Mds && rep.d == 6 && rep.theorem_verdict == Verdict::Mds &&
                       rep.agreement;
    if (!claim) {
        o.fail("stated outcome MDS [8,3,6] does not hold at (eta,delta)=(9,9)");
        std::ostringstream got;
        got << "computed: brute " << to_string(*rep.brute_verdict) << " [8,3," << *rep.d << "]";
        if (rep.d_dual) got << " with dual distance " << *rep.d_dual;
        got << "; theorem verdict " << to_string(*rep.theorem_verdict)
            << "; theorem/brute agreement: " << (rep.agreement ? "yes" : "no");
        o.note(got.str());
        o.note("independent confirmation: generator columns {1,6,8} are linearly dependent "
               "(det of that 3x3 minor is 0), so d <= 5; both the message-enumeration and "
               "column-rank distance routes give d = 5");
        o.note("no (9,9)-adjacent sign variant rescues the claim; the only MDS pairs for this "
               "alpha are eta in {1,12} (e.g. (1,5), (12,9))");
    }
    if (secs >= 1.0) o.fail("runtime " + std::to_string(secs) + "s exceeds 1s");
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const FieldSpec& f = FieldSpec::get(2, 3);
    const FieldElement g = primitive_element(f);
    for (int t = 1; t <= 6; ++t) {
        auto params = EtgrsParams::make(f, 4, 4, {one(f), g.pow(3), g.pow(5), g.pow(6)}, {}, g.pow(t), one(f));
        const auto rep = classify_full(params, Mode::Both);
        if (!(rep.brute_verdict == Verdict::Mds && rep.d == 4 && rep.theorem_verdict == Verdict::Mds && rep.agreement))
            o.fail("pair (g^" + std::to_string(t) + ", 1) is not MDS [7,4,4]");
    }
    const double secs = seconds_since(t0);
    if (secs >= 5.0) o.fail("runtime " + std::to_string(secs) + "s exceeds 5s");
    if (o.pass) o.note("all six pairs (g^t, 1) classify MDS [7,4,4]");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const FieldSpec& f = FieldSpec::get(2, 3);
    const FieldElement g = primitive_element(f);
    auto elem = [&](int t) { return t < 0 ? zero(f) : g.pow(t); };
    const std::vector<std::pair<int, int>> pairs = {
        {2, -1}, {2, 0}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {4, -1}, {4, 1}, {4, 3}, {4, 4}, {4, 6},
        {5, -1}, {5, 0}, {5, 1}, {5, 3}, {5, 4}, {6, -1}, {6, 0}, {6, 2}, {6, 4}, {6, 5}, {6, 6},
    };
    std::vector<FieldElement> alpha = {one(f), g, g.pow(2), g.pow(4), g.pow(5)};
    size_t ok = 0;
    for (const auto& [te, td] : pairs) {
        auto params = EtgrsParams::make(f, 5, 3, alpha, {}, elem(te), elem(td));
        const auto rep = classify_full(params, Mode::Both);
        const bool good = rep.d == 5 && rep.d_dual == 3 && rep.brute_verdict == Verdict::Nmds &&
                          rep.theorem_verdict == Verdict::Nmds && rep.agreement;
        if (good)
            ++ok;
        else
            o.fail("pair (g^" + std::to_string(te) + "," + (td < 0 ? "0" : "g^" + std::to_string(td)) +
                   ") does not classify AMDS/NMDS [8,3,5]");
    }
    const double secs = seconds_since(t0);
    if (secs >= 10.0) o.fail("runtime " + std::to_string(secs) + "s exceeds 10s");
    if (o.pass) o.note("all 22 pairs classify AMDS with d=5, NMDS confirmed by dual distance 3");
    return o;
}

Outcome criterion4() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const FieldSpec& f = FieldSpec::get(11);
    auto alpha = elems(f, {0, 4, 5, 8, 9});
    size_t disjunction_ok = 0, dual_amds_ok = 0;
    std::vector<std::string> failures;
    size_t dual_dim = 0;
    for (uint32_t eta = 1; eta <= 10; ++eta) {
        for (uint32_t dl = 0; dl <= 10; ++dl) {
            auto params = EtgrsParams::make(f, 5, 3, alpha, {}, FieldElement(f, eta), FieldElement(f, dl));
            const auto rep = check_dual_amds(params);
            const bool disjunction = std::any_of(rep.cases.begin(), rep.cases.end(),
                                                 [](const ConditionReport& c) { return c.holds; });
            if (disjunction) ++disjunction_ok;
            const LinearCode dc = dual(etgrs_code(params));
            dual_dim = dc.dimension();
            const size_t dd = min_distance(dc);
            const bool amds = dd == 8 - dual_dim;
            if (amds)
                ++dual_amds_ok;
            else
                failures.push_back("(" + std::to_string(eta) + "," + std::to_string(dl) + ") dual d=" +
                                   std::to_string(dd));
        }
    }
    o.note("stated reference dual parameters [8,4,4] are a recorded deviation: computed dual dimension is " +
           std::to_string(dual_dim) + " (dual parameters [8,5,3] where AMDS holds)");
    if (disjunction_ok != 110)
        o.fail("five-case disjunction holds for only " + std::to_string(disjunction_ok) + "/110 pairs");
    else
        o.note("five-case disjunction holds for 110/110 pairs");
    if (dual_amds_ok != 110) {
        o.fail("brute-force dual AMDS holds for only " + std::to_string(dual_amds_ok) + "/110 pairs");
        std::string list = "failing pairs (all have delta=0): ";
        for (size_t i = 0; i < failures.size(); ++i) list += (i ? ", " : "") + failures[i];
        o.note(list);
        o.note("cause: with 0 among the evaluation points and delta=0, the alpha=0 column equals the "
               "last tail column, so two columns of G coincide and the dual distance drops to 2; the "
               "every-(k-1)-columns-independent premise fails for these pairs");
    }
    const double secs = seconds_since(t0);
    if (secs >= 30.0) o.fail("runtime " + std::to_string(secs) + "s exceeds 30s");
    return o;
}

Outcome criterion5() {
    Outcome o;
    const auto& suite = instance_suite();
    size_t agree = 0;
    for (const auto& r : suite) {
        if (r.verdicts_agree)
            ++agree;
        else
            o.fail("theorem/brute disagreement at " + r.desc);
    }
    o.note("theorem-mode verdict equals brute-force verdict on " + std::to_string(agree) + "/" +
           std::to_string(suite.size()) + " randomized instances");
    return o;
}

Outcome criterion6() {
    Outcome o;
    std::mt19937 rng(424243);
    const std::vector<const FieldSpec*> fields = {&FieldSpec::get(2, 2), &FieldSpec::get(7),  &FieldSpec::get(2, 3),
                                                  &FieldSpec::get(3, 2), &FieldSpec::get(11), &FieldSpec::get(13),
                                                  &FieldSpec::get(2, 4)};
    // power-weight identity, every test field, all sizes, h up to n+6
    size_t pw_checks = 0;
    for (const FieldSpec* f : fields) {
        for (size_t n = 2; n <= std::min<size_t>(8, f->q()); ++n) {
            auto vals = oracles::random_distinct(*f, n, rng);
            SymContext ctx(*f, vals);
            for (uint64_t h = 0; h <= n + 6; ++h) {
                const FieldElement got = power_weight_sum(ctx, h);
                const FieldElement want = h <= n - 2 ? zero(*f) : complete_sym(ctx, (size_t)(h - n + 1));
                if (got != want) o.fail("power-weight identity fails at q=" + std::to_string(f->q()) +
                                        " n=" + std::to_string(n) + " h=" + std::to_string(h));
                ++pw_checks;
            }
        }
    }
    o.note("power-weight identity: " + std::to_string(pw_checks) + " exact checks");

    // determinant-quotient identities on random subsets, eta, delta
    size_t det_checks = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const FieldSpec& f = *fields[trial % fields.size()];
        std::uniform_int_distribution<size_t> dk(3, std::min<size_t>(5, f.q()));
        const size_t k = dk(rng);
        if (f.q() < k + 1) continue;
        std::uniform_int_distribution<size_t> dn(k, std::min<size_t>(7, f.q()));
        const size_t n = dn(rng);
        auto params = EtgrsParams::make(f, n, k, oracles::random_distinct(f, n, rng), {},
                                        oracles::random_nonzero(f, rng), oracles::random_element(f, rng));
        // check_mds hard-asserts formula == minor determinant on every
        // subset of all five families; a mismatch throws
        try {
            (void)check_mds(params);
            det_checks += 5;
        } catch (const std::logic_error& e) {
            o.fail(std::string("determinant identity violated: ") + e.what());
        }
    }
    o.note("determinant-quotient identities: " + std::to_string(det_checks) + " family scans, all exact");

    // printed-formula delta vs complete homogeneous h, with the resolved signs
    size_t delta_checks = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const FieldSpec& f = *fields[trial % fields.size()];
        std::uniform_int_distribution<size_t> dn(2, std::min<size_t>(6, f.q()));
        auto vals = oracles::random_distinct(f, dn(rng), rng);
        SymContext ctx(f, vals);
        const bool ok = sigma_formula_delta(ctx, 2, SigmaConvention::Unsigned) == complete_sym(ctx, 2) &&
                        sigma_formula_delta(ctx, 3, SigmaConvention::Unsigned) == complete_sym(ctx, 3) &&
                        sigma_formula_delta(ctx, 4, SigmaConvention::Unsigned) == complete_sym(ctx, 4) &&
                        sigma_formula_delta(ctx, 5, SigmaConvention::Unsigned) == -complete_sym(ctx, 5) &&
                        sigma_formula_delta(ctx, 3, SigmaConvention::Signed) == -complete_sym(ctx, 3) &&
                        sigma_formula_delta(ctx, 5, SigmaConvention::Signed) == complete_sym(ctx, 5);
        if (!ok) o.fail("delta/h relation violated on a random context over q=" + std::to_string(f.q()));
        ++delta_checks;
    }
    o.note("printed delta formulas vs h_r: " + std::to_string(delta_checks) +
           " contexts; resolution: levels 2,3,4 match h_r with unsigned sigma, level 5 equals -h_5 there "
           "(and +h_5 under signed sigma) - the production conditions are pinned by the determinant "
           "identities, which need h_3 and h_5 with the signs used here");
    return o;
}

Outcome criterion7() {
    Outcome o;
    const auto& suite = instance_suite();
    size_t ok = 0;
    for (const auto& r : suite) {
        if (r.extension_ok)
            ++ok;
        else
            o.fail("extension contract fails at " + r.desc);
    }
    o.note("closed-formula extension vector satisfies its contract and rebuilds the code on " +
           std::to_string(ok) + "/" + std::to_string(suite.size()) + " instances");
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937 rng(777);
    // 50 in-range instances: Schur dimension >= 2k vs GRS exactly 2k-1
    const std::vector<const FieldSpec*> fields = {&FieldSpec::get(11), &FieldSpec::get(13), &FieldSpec::get(2, 4)};
    size_t done = 0;
    while (done < 50) {
        const FieldSpec& f = *fields[done % fields.size()];
        std::uniform_int_distribution<size_t> dn(5, f.q() - 2);
        const size_t n = dn(rng);
        const size_t kmax = std::min<size_t>((n + 2) / 2, 6);
        if (kmax < 3) continue;
        std::uniform_int_distribution<size_t> dk(3, kmax);
        const size_t k = dk(rng);
        auto params = EtgrsParams::make(f, n, k, oracles::random_distinct(f, n, rng), {},
                                        oracles::random_nonzero(f, rng), oracles::random_element(f, rng));
        const auto rep = certify_c1(params);
        if (!(rep.certified && rep.schur_dim && *rep.schur_dim >= 2 * k))
            o.fail("Schur dimension below 2k at q=" + std::to_string(f.q()) + " n=" + std::to_string(n) +
                   " k=" + std::to_string(k));
        auto pts = oracles::random_distinct(f, n + 2, rng);
        std::vector<FieldElement> mult;
        for (size_t i = 0; i < n + 2; ++i) mult.push_back(oracles::random_nonzero(f, rng));
        if (schur_square(grs_code(pts, mult, k)).dimension() != 2 * k - 1)
            o.fail("GRS Schur square dimension is not 2k-1 at q=" + std::to_string(f.q()));
        ++done;
    }
    o.note("50 instances: Schur-square dimension >= 2k for the construction, exactly 2k-1 for GRS");

    // 10 dual-square instances at q=13, n=12, k=8
    const FieldSpec& f13 = FieldSpec::get(13);
    for (int trial = 0; trial < 10; ++trial) {
        auto alpha = oracles::random_distinct(f13, 12, rng);
        std::vector<FieldElement> v;
        for (int i = 0; i < 12; ++i)
            v.push_back(trial % 2 ? oracles::random_nonzero(f13, rng) : one(f13));
        const FieldElement eta = oracles::random_nonzero(f13, rng);
        auto params = EtgrsParams::make(f13, 12, 8, std::move(alpha), std::move(v), eta,
                                        oracles::random_element(f13, rng));
        const auto rep = certify_c(params);
        bool good = rep.regime == NonGrsRegime::CCase2 && rep.certified && rep.findings.empty() && rep.witness;
        if (good) {
            const auto& w = *rep.witness;
            for (size_t i = 0; i < w.size() && good; ++i)
                good = (i == 12) ? (w[i] == -(eta * eta)) : w[i].is_zero();
        }
        if (!good) o.fail("dual-square witness malformed at trial " + std::to_string(trial));
    }
    o.note("10 instances at q=13, n=12, k=8: dual words orthogonal to G, combined word is exactly "
           "(0,...,0,-eta^2,0,0)");
    return o;
}

Outcome criterion9() {
    Outcome o;
    const std::vector<std::string> base = {"search", "--field", "2^3",    "--n",     "4",   "--k",      "4",
                                           "--alpha", "1,g^3,g^5,g^6",    "--etas",  "all", "--deltas", "all",
                                           "--dual-amds"};
    std::vector<std::string> outputs;
    for (const char* workers : {"1", "2", "4", "1", "4"}) {
        auto args = base;
        args.push_back("--workers");
        args.push_back(workers);
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        if (code != 0) o.fail("search exited with code " + std::to_string(code));
        outputs.push_back(out.str());
    }
    for (size_t i = 1; i < outputs.size(); ++i)
        if (outputs[i] != outputs[0]) o.fail("output differs between runs/worker counts");
    if (o.pass) o.note("five runs across worker counts 1/2/4 produced byte-identical output");
    return o;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Entry> entries = {
        {1, "reference case 1: GF(13) instance classifies MDS [8,3,6]", criterion1},
        {2, "reference case 2: GF(8) sweep, six MDS [7,4,4] pairs", criterion2},
        {3, "reference case 3: GF(8) sweep, 22 AMDS/NMDS [8,3,5] pairs", criterion3},
        {4, "reference case 4: GF(11) sweep, 110 dual-AMDS pairs", criterion4},
        {5, "oracle equivalence: theorem verdicts equal brute force on 200 instances", criterion5},
        {6, "identity suites: power-weight, determinant quotients, delta/h resolution", criterion6},
        {7, "extension-vector contract on every instance of criterion 5", criterion7},
        {8, "non-GRS certification: Schur dimensions and dual-square witnesses", criterion8},
        {9, "determinism: sweep output is byte-identical across worker counts", criterion9},
    };

    int failures = 0;
    for (const auto& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        const double secs = seconds_since(t0);
        std::ostringstream line;
        line << "criterion " << e.id << ": " << e.title << " ... " << (o.pass ? "PASS" : "FAIL") << "  ("
             << std::fixed;
        line.precision(2);
        line << secs << "s)";
        std::cout << line.str() << "\n";
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
        if (!o.pass) ++failures;
    }
    std::cout << "summary: " << (entries.size() - failures) << "/" << entries.size() << " criteria passed\n";
    if (failures) {
        std::cout << "note: failing criteria restate bundled reference claims whose computed ground truth\n"
                     "differs; the detail lines above and the README record the verified values.\n";
    }
    return failures == 0 ? 0 : 1;
}
