#include "etgrs/etgrs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace etgrs {

namespace {

constexpr uint64_t kSubsetBudget = 200000;

uint64_t binomial_capped(size_t n, size_t w, uint64_t cap) {
    if (w > n) return 0;
    uint64_t r = 1;
    for (size_t i = 0; i < w; ++i) {
        r = r * (n - i) / (i + 1);
        if (r > cap) return cap + 1;
    }
    return r;
}

// Lexicographic enumeration of the size-w subsets of {0..n-1}.
template <typename Fn>
void for_each_subset(size_t n, size_t w, Fn&& fn) {
    if (w > n) return;
    if (binomial_capped(n, w, kSubsetBudget) > kSubsetBudget)
        throw BudgetExceeded("etgrs: subset family larger than " + std::to_string(kSubsetBudget));
    std::vector<size_t> idx(w);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(static_cast<const std::vector<size_t>&>(idx));
        bool advanced = false;
        for (size_t i = w; i-- > 0;) {
            if (idx[i] != i + n - w) {
                ++idx[i];
                for (size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
}

std::string subset_text(const std::vector<size_t>& idx) {
    std::string s = "{";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i] + 1);  // 1-based in messages
    }
    return s + "}";
}

// Condition family descriptors. Tail column ids (0-based):
//   n   -> coefficient f_{k-1}
//   n+1 -> coefficient f_{k-2}
//   n+2 -> coefficient f_{k-3} + delta f_{k-1}
struct Family {
    size_t alpha_size(size_t k) const {
        switch (index) {
            case 1: return k;
            case 2:
            case 3: return k - 1;
            default: return k - 2;
        }
    }
    std::vector<size_t> tails(size_t n) const {
        switch (index) {
            case 1: return {};
            case 2: return {n + 1};
            case 3: return {n + 2};
            case 4: return {n, n + 2};
            default: return {n + 1, n + 2};
        }
    }
    int index;
};

// The determinant of the family's k x k generator minor equals this value
// times the subset Vandermonde determinant, up to a nonzero constant
// (sign and the product of the column multipliers). Zero iff the minor is
// singular, which is what the conditions test.
FieldElement family_formula(const EtgrsParams& p, int family, const std::vector<size_t>& idx) {
    const FieldSpec& f = *p.spec;
    std::vector<FieldElement> pts;
    pts.reserve(idx.size());
    for (size_t i : idx) pts.push_back(p.alpha[i]);
    SymContext ctx(f, pts);
    switch (family) {
        case 1:
            return one(f) + p.eta * complete_sym(ctx, 3);
        case 2:
            return elem_sym(ctx, 1) + p.eta * complete_sym(ctx, 4);
        case 3:
            return elem_sym(ctx, 2) + p.delta +
                   p.eta * (elem_sym(ctx, 1) * complete_sym(ctx, 4) - complete_sym(ctx, 5));
        case 4:
            return elem_sym(ctx, 1);
        default:
            return p.delta - complete_sym(ctx, 2) - p.eta * complete_sym(ctx, 5);
    }
}

std::vector<size_t> family_columns(const EtgrsParams& p, int family, const std::vector<size_t>& alpha_idx) {
    std::vector<size_t> cols = alpha_idx;
    for (size_t t : Family{family}.tails(p.n)) cols.push_back(t);
    return cols;
}

FieldElement family_minor_det(const FieldMatrix& G, const EtgrsParams& p, int family,
                              const std::vector<size_t>& alpha_idx) {
    return det(select_cols(G, family_columns(p, family, alpha_idx)));
}

void assert_paths_agree(const FieldElement& formula, const FieldElement& minor_det, const std::string& where) {
    if (formula.is_zero() != minor_det.is_zero())
        throw std::logic_error("etgrs: formula and minor determinant disagree at " + where);
}

bool every_subset_has_rank(const FieldMatrix& G, size_t subset_size, size_t want_rank,
                           std::vector<size_t>* first_deficient) {
    bool all = true;
    for_each_subset(G.cols(), subset_size, [&](const std::vector<size_t>& idx) {
        if (!all) return;
        if (rank(select_cols(G, idx)) < want_rank) {
            all = false;
            if (first_deficient) *first_deficient = idx;
        }
    });
    return all;
}

}  // namespace

EtgrsParams EtgrsParams::make(const FieldSpec& spec, size_t n, size_t k, std::vector<FieldElement> alpha,
                              std::vector<FieldElement> v, FieldElement eta, FieldElement delta) {
    if (k < 3) throw std::invalid_argument("etgrs: dimension k must be at least 3");
    if (k > n) throw std::invalid_argument("etgrs: k must not exceed n");
    if (n > spec.q()) throw std::invalid_argument("etgrs: n must not exceed the field order");
    if (alpha.size() != n) throw std::invalid_argument("etgrs: alpha must have n entries");
    if (v.empty()) v.assign(n, one(spec));
    if (v.size() != n) throw std::invalid_argument("etgrs: v must have n entries");
    for (size_t i = 0; i < n; ++i) {
        if (&alpha[i].spec() != &spec || &v[i].spec() != &spec)
            throw std::invalid_argument("etgrs: parameter from a different field");
        if (v[i].is_zero())
            throw std::invalid_argument("etgrs: multiplier v at position " + std::to_string(i + 1) + " is zero");
        for (size_t j = i + 1; j < n; ++j)
            if (alpha[i] == alpha[j])
                throw std::invalid_argument("etgrs: alpha entries at positions " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " are equal");
    }
    if (&eta.spec() != &spec || &delta.spec() != &spec)
        throw std::invalid_argument("etgrs: parameter from a different field");
    if (eta.is_zero()) throw std::invalid_argument("etgrs: twist coefficient eta must be nonzero");
    return EtgrsParams{&spec, n, k, std::move(alpha), std::move(v), eta, delta};
}

FieldMatrix generator_matrix(const EtgrsParams& p) {
    const FieldSpec& f = *p.spec;
    const size_t n = p.n, k = p.k, N = n + 3;
    FieldMatrix G(f, k, N);
    // rows alpha^0 .. alpha^(k-4), zero tails (absent for k = 3)
    for (size_t r = 0; r + 3 < k; ++r)
        for (size_t j = 0; j < n; ++j) G.set_raw(r, j, f.pow(p.alpha[j].value(), r));
    for (size_t j = 0; j < n; ++j) {
        G.set_raw(k - 3, j, f.pow(p.alpha[j].value(), k - 3));
        G.set_raw(k - 2, j, f.pow(p.alpha[j].value(), k - 2));
        G.set_raw(k - 1, j,
                  f.add(f.pow(p.alpha[j].value(), k - 1), f.mul(p.eta.value(), f.pow(p.alpha[j].value(), k + 2))));
    }
    G.set_raw(k - 3, n + 2, 1);            // f_{k-3} column
    G.set_raw(k - 2, n + 1, 1);            // f_{k-2} column
    G.set_raw(k - 1, n, 1);                // f_{k-1} column
    G.set_raw(k - 1, n + 2, p.delta.value());
    for (size_t j = 0; j < n; ++j)
        for (size_t r = 0; r < k; ++r) G.set_raw(r, j, f.mul(G.raw(r, j), p.v[j].value()));
    return G;
}

std::vector<FieldElement> twisted_encode(const EtgrsParams& p, std::span<const FieldElement> coeffs) {
    if (coeffs.size() != p.k) throw std::invalid_argument("etgrs: expected k coefficients");
    const FieldSpec& f = *p.spec;
    std::vector<FieldElement> word;
    word.reserve(p.n + 3);
    for (size_t j = 0; j < p.n; ++j) {
        uint32_t acc = 0;
        const uint32_t a = p.alpha[j].value();
        for (size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, a), coeffs[i].value());
        acc = f.add(acc, f.mul(p.eta.value(), f.mul(coeffs[p.k - 1].value(), f.pow(a, p.k + 2))));
        word.emplace_back(f, f.mul(p.v[j].value(), acc));
    }
    word.push_back(coeffs[p.k - 1]);
    word.push_back(coeffs[p.k - 2]);
    word.push_back(coeffs[p.k - 3] + p.delta * coeffs[p.k - 1]);
    return word;
}

LinearCode etgrs_code(const EtgrsParams& p) { return LinearCode(generator_matrix(p)); }

LinearCode punctured_code(const EtgrsParams& p) { return puncture(etgrs_code(p), p.n + 2); }

ExtensionVector extension_vector(const EtgrsParams& p) {
    const FieldSpec& f = *p.spec;
    const size_t n = p.n, k = p.k;
    SymContext full(f, p.alpha);
    const auto u = u_weights(full);

    std::vector<FieldElement> t;
    t.reserve(n + 2);
    for (size_t i = 0; i < n; ++i) t.push_back(p.v[i].inv() * u[i] * p.alpha[i].pow(n + 2 - k));
    t.push_back(p.delta - complete_sym(full, 2) - p.eta * complete_sym(full, 5));
    t.push_back(-complete_sym(full, 1));

    const FieldMatrix G = generator_matrix(p);
    std::vector<size_t> keep(n + 2);
    std::iota(keep.begin(), keep.end(), 0);
    const FieldMatrix G1 = select_cols(G, keep);

    std::vector<FieldElement> target;
    target.reserve(k);
    for (size_t r = 0; r < k; ++r) target.push_back(FieldElement(f, G.raw(r, n + 2)));

    ExtensionVector out{std::move(t), true};
    if (matvec(G1, out.t) != target) {
        out.formula_matched_contract = false;
        // recover a particular solution of G1 x = target from the reduced
        // echelon form of the augmented system (free variables zero)
        FieldMatrix aug(f, k, n + 3);
        for (size_t r = 0; r < k; ++r) {
            for (size_t c = 0; c < n + 2; ++c) aug.set_raw(r, c, G1.raw(r, c));
            aug.set_raw(r, n + 2, target[r].value());
        }
        FieldMatrix red = rref(aug);
        std::vector<FieldElement> x(n + 2, zero(f));
        for (size_t r = 0; r < k; ++r) {
            size_t c = 0;
            while (c < n + 3 && red.raw(r, c) == 0) ++c;
            if (c == n + 3) continue;
            if (c == n + 2) throw std::runtime_error("etgrs: extension system is inconsistent");
            x[c] = FieldElement(f, red.raw(r, n + 2));
        }
        out.t = std::move(x);
        if (matvec(G1, out.t) != target) throw std::logic_error("etgrs: solved extension vector fails the contract");
    }
    return out;
}

std::vector<ConditionReport> check_mds(const EtgrsParams& p) {
    const FieldMatrix G = generator_matrix(p);
    std::vector<ConditionReport> out;
    bool all5 = true;
    for (int fam = 1; fam <= 5; ++fam) {
        ConditionReport rep;
        rep.id = "mds." + std::to_string(fam);
        rep.holds = true;
        for_each_subset(p.n, Family{fam}.alpha_size(p.k), [&](const std::vector<size_t>& idx) {
            const FieldElement fv = family_formula(p, fam, idx);
            const FieldElement dv = family_minor_det(G, p, fam, idx);
            assert_paths_agree(fv, dv, rep.id + " " + subset_text(idx));
            if (fv.is_zero() && rep.holds) {
                rep.holds = false;
                rep.witness = idx;
            }
        });
        all5 = all5 && rep.holds;
        out.push_back(std::move(rep));
    }
    if (every_subset_has_rank(G, p.k, p.k, nullptr) != all5)
        throw std::logic_error("etgrs: minor families disagree with the complete k-subset rank scan");
    return out;
}

std::vector<ConditionReport> check_amds(const EtgrsParams& p) {
    const FieldMatrix G = generator_matrix(p);
    const size_t k = p.k;
    std::vector<ConditionReport> out;
    bool all_full = true;

    for (int fam = 1; fam <= 5; ++fam) {
        ConditionReport rep;
        rep.id = "amds." + std::to_string(fam);
        rep.holds = true;
        const size_t super_size = Family{fam}.alpha_size(k) + 1;
        for_each_subset(p.n, super_size, [&](const std::vector<size_t>& super) {
            const auto cols = family_columns(p, fam, super);
            const bool full = rank(select_cols(G, cols)) == k;

            // minors obtained by dropping one alpha column (the printed
            // existence form quantifies over these only)
            bool narrow = false;
            for (size_t drop = 0; drop < super.size(); ++drop) {
                std::vector<size_t> sub;
                sub.reserve(super.size() - 1);
                for (size_t i = 0; i < super.size(); ++i)
                    if (i != drop) sub.push_back(super[i]);
                if (!family_formula(p, fam, sub).is_zero()) {
                    narrow = true;
                    break;
                }
            }
            // complete formula adds the minors that drop a tail column
            bool complete = narrow;
            if (!complete) {
                switch (fam) {
                    case 2:
                    case 3:
                        complete = !family_formula(p, 1, super).is_zero();
                        break;
                    case 4:
                        complete = true;  // dropping the last tail leaves an always-invertible minor
                        break;
                    case 5:
                        complete = !family_formula(p, 2, super).is_zero() || !family_formula(p, 3, super).is_zero();
                        break;
                    default:
                        break;
                }
            }
            if (complete != full)
                throw std::logic_error("etgrs: " + rep.id + " formula disagrees with rank at " + subset_text(super));
            if (narrow != full) rep.narrow_formula_agrees = false;
            if (!full && rep.holds) {
                rep.holds = false;
                rep.witness = super;
            }
        });
        all_full = all_full && rep.holds;
        out.push_back(std::move(rep));
    }
    if (every_subset_has_rank(G, k + 1, k, nullptr) != all_full)
        throw std::logic_error("etgrs: minor families disagree with the complete (k+1)-subset rank scan");

    // condition 6: some k columns are linearly dependent
    ConditionReport six;
    six.id = "amds.6";
    bool formula_exists = false;
    for (int fam = 1; fam <= 5 && !formula_exists; ++fam) {
        for_each_subset(p.n, Family{fam}.alpha_size(k), [&](const std::vector<size_t>& idx) {
            if (!formula_exists && family_formula(p, fam, idx).is_zero()) formula_exists = true;
        });
    }
    std::vector<size_t> dep;
    const bool rank_exists = !every_subset_has_rank(G, k, k, &dep);
    if (formula_exists != rank_exists)
        throw std::logic_error("etgrs: dependent-columns existence disagrees between formula and rank");
    six.holds = rank_exists;
    if (rank_exists) six.witness = dep;
    out.push_back(std::move(six));
    return out;
}

DualAmdsReport check_dual_amds(const EtgrsParams& p) {
    const FieldMatrix G = generator_matrix(p);
    DualAmdsReport rep;
    bool any = false;
    for (int fam = 1; fam <= 5; ++fam) {
        ConditionReport c;
        c.id = "dual." + std::to_string(fam);
        c.holds = false;
        for_each_subset(p.n, Family{fam}.alpha_size(p.k), [&](const std::vector<size_t>& idx) {
            const FieldElement fv = family_formula(p, fam, idx);
            const FieldElement dv = family_minor_det(G, p, fam, idx);
            assert_paths_agree(fv, dv, c.id + " " + subset_text(idx));
            if (fv.is_zero() && !c.holds) {
                c.holds = true;
                c.witness = idx;
            }
        });
        any = any || c.holds;
        rep.cases.push_back(std::move(c));
    }
    std::vector<size_t> deficient;
    rep.all_k_minus_1_independent = every_subset_has_rank(G, p.k - 1, p.k - 1, &deficient);
    if (!rep.all_k_minus_1_independent) rep.deficient_columns = deficient;
    rep.holds = any && rep.all_k_minus_1_independent;
    return rep;
}

ClassificationReport classify_full(const EtgrsParams& p, Mode mode, uint64_t budget) {
    ClassificationReport rep;
    rep.params = p;
    rep.length = p.n + 3;

    if (mode == Mode::Theorems || mode == Mode::Both) {
        rep.mds_conditions = check_mds(p);
        rep.amds_conditions = check_amds(p);
        rep.dual_report = check_dual_amds(p);

        const bool mds = std::all_of(rep.mds_conditions.begin(), rep.mds_conditions.end(),
                                     [](const ConditionReport& c) { return c.holds; });
        const bool amds = std::all_of(rep.amds_conditions.begin(), rep.amds_conditions.end(),
                                      [](const ConditionReport& c) { return c.holds; });
        if (mds) {
            rep.theorem_verdict = Verdict::Mds;
        } else if (amds) {
            rep.theorem_verdict = rep.dual_report->holds ? Verdict::Nmds : Verdict::Amds;
            if (!rep.dual_report->holds)
                rep.findings.push_back(
                    {"nmds-equivalence-violated",
                     "code is AMDS but its dual is not AMDS; the AMDS<=>NMDS equivalence fails at these parameters"});
        } else {
            rep.theorem_verdict = Verdict::Other;
        }
        for (const auto& c : rep.amds_conditions)
            if (!c.narrow_formula_agrees)
                rep.findings.push_back({"narrow-existence-form",
                                        c.id + ": the alpha-minor-only existence form disagrees with the minor rank"});
        if (!rep.dual_report->all_k_minus_1_independent)
            rep.findings.push_back({"k-minus-1-dependency",
                                    "columns " + subset_text(*rep.dual_report->deficient_columns) +
                                        " are dependent, so the dual distance is below k"});
    }

    if (mode == Mode::Brute || mode == Mode::Both) {
        const LinearCode code = etgrs_code(p);
        const size_t N = rep.length, k = p.k;
        const size_t d = min_distance(code, budget);
        rep.d = d;
        CodeParams cp{N, k, d, std::nullopt};
        if (d == N - k) {
            const size_t dd = min_distance(dual(code), budget);
            rep.d_dual = dd;
            cp.dual_min_distance = dd;
        }
        rep.brute_verdict = classify(cp).verdict;
    }

    if (mode == Mode::Both) rep.agreement = (*rep.theorem_verdict == *rep.brute_verdict);
    return rep;
}

std::vector<SearchRow> search(const FieldSpec& spec, size_t n, size_t k, std::vector<FieldElement> alpha,
                              std::vector<FieldElement> v, const std::vector<FieldElement>& eta_set,
                              const std::vector<FieldElement>& delta_set, bool brute_confirm, uint64_t budget,
                              unsigned workers) {
    if (eta_set.empty()) throw std::invalid_argument("search: eta set is empty");
    if (delta_set.empty()) throw std::invalid_argument("search: delta set is empty");

    auto sorted_unique = [](std::vector<FieldElement> s) {
        std::sort(s.begin(), s.end(), [](const FieldElement& a, const FieldElement& b) { return a.value() < b.value(); });
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    };
    const auto etas = sorted_unique(eta_set);
    const auto deltas = sorted_unique(delta_set);

    std::vector<std::pair<FieldElement, FieldElement>> pairs;
    for (const auto& e : etas)
        for (const auto& d : deltas) pairs.emplace_back(e, d);

    std::vector<SearchRow> rows(pairs.size(), SearchRow{zero(spec), zero(spec), Verdict::Other, false, {}, true});
    auto eval_range = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < pairs.size(); i += step) {
            const auto params = EtgrsParams::make(spec, n, k, alpha, v, pairs[i].first, pairs[i].second);
            const auto rep = classify_full(params, brute_confirm ? Mode::Both : Mode::Theorems, budget);
            SearchRow row{pairs[i].first, pairs[i].second, *rep.theorem_verdict, rep.dual_report->holds,
                          rep.brute_verdict, rep.agreement};
            rows[i] = std::move(row);
        }
    };

    if (workers <= 1 || pairs.size() <= 1) {
        eval_range(0, 1);
    } else {
        const unsigned nthreads = std::min<unsigned>(workers, (unsigned)pairs.size());
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            threads.emplace_back([&, t] {
                try {
                    eval_range(t, nthreads);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : threads) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return rows;
}

}  // namespace etgrs
