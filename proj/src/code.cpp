#include "etgrs/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace etgrs {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Mds: return "MDS";
        case Verdict::Nmds: return "NMDS";
        case Verdict::Amds: return "AMDS";
        default: return "OTHER";
    }
}

ClassifyResult classify(const CodeParams& p) {
    if (p.dimension > p.length) throw std::invalid_argument("classify: dimension exceeds length");
    if (p.min_distance == 0 || p.min_distance > p.length - p.dimension + 1)
        throw std::invalid_argument("classify: distance violates the Singleton bound");
    if (p.dual_min_distance && (*p.dual_min_distance == 0 || *p.dual_min_distance > p.dimension + 1))
        throw std::invalid_argument("classify: dual distance violates the Singleton bound");
    if (p.min_distance == p.length - p.dimension + 1) return {Verdict::Mds, false};
    if (p.min_distance == p.length - p.dimension) {
        if (!p.dual_min_distance) return {Verdict::Amds, true};
        return {*p.dual_min_distance == p.dimension ? Verdict::Nmds : Verdict::Amds, false};
    }
    return {Verdict::Other, false};
}

LinearCode::LinearCode(FieldMatrix gen) : gen_(std::move(gen)) {
    if (rank(gen_) != gen_.rows())
        throw std::invalid_argument("code: generator matrix is rank deficient (rows are dependent)");
}

LinearCode code_from_generator(FieldMatrix gen) { return LinearCode(std::move(gen)); }

namespace {

uint64_t checked_pow(uint64_t base, uint64_t exp, uint64_t cap) {
    uint64_t r = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

size_t min_distance(const LinearCode& c, uint64_t budget) {
    const FieldSpec& f = c.spec();
    const size_t k = c.dimension();
    const size_t N = c.length();
    if (k == 0) throw std::invalid_argument("code: minimum distance of the zero code is undefined");
    const uint64_t q = f.q();
    if (checked_pow(q, k, budget) > budget)
        throw BudgetExceeded("code: q^k exceeds the enumeration budget of " + std::to_string(budget));

    const FieldMatrix& G = c.generator();
    // scaled_rows[i][s] = s * row_i, flattened
    std::vector<std::vector<uint32_t>> scaled(k, std::vector<uint32_t>(q * N));
    for (size_t i = 0; i < k; ++i)
        for (uint64_t s = 0; s < q; ++s)
            for (size_t j = 0; j < N; ++j) scaled[i][s * N + j] = f.mul((uint32_t)s, G.raw(i, j));
    // step_delta[e] = encoding of elem(e+1) - elem(e)
    std::vector<uint32_t> step_delta(q - 1);
    for (uint64_t e = 0; e + 1 < q; ++e) step_delta[e] = f.sub((uint32_t)(e + 1), (uint32_t)e);

    size_t best = N + 1;
    std::vector<uint32_t> word(N);
    std::vector<uint32_t> digit(k);
    // one representative per scalar class: lowest nonzero message digit is 1
    for (size_t lead = 0; lead < k && best > 1; ++lead) {
        std::fill(digit.begin(), digit.end(), 0);
        for (size_t j = 0; j < N; ++j) word[j] = G.raw(lead, j);
        const size_t free_from = lead + 1;
        while (true) {
            size_t w = 0;
            for (size_t j = 0; j < N && w < best; ++j)
                if (word[j] != 0) ++w;
            if (w < best && w > 0) best = w;
            // odometer over digits free_from..k-1
            size_t pos = free_from;
            while (pos < k && digit[pos] == q - 1) ++pos;
            if (pos >= k) break;
            const uint32_t* add_row = &scaled[pos][(size_t)step_delta[digit[pos]] * N];
            for (size_t j = 0; j < N; ++j) word[j] = f.add(word[j], add_row[j]);
            ++digit[pos];
            for (size_t r = free_from; r < pos; ++r) {
                // digit r wraps q-1 -> 0: contribution changes by -elem(q-1) * row_r
                const uint32_t* wrap_row = &scaled[r][(size_t)f.neg((uint32_t)(q - 1)) * N];
                for (size_t j = 0; j < N; ++j) word[j] = f.add(word[j], wrap_row[j]);
                digit[r] = 0;
            }
        }
    }
    return best;
}

size_t min_distance_by_column_rank(const LinearCode& c) {
    const size_t N = c.length();
    const size_t k = c.dimension();
    if (k == 0) throw std::invalid_argument("code: minimum distance of the zero code is undefined");
    if (k == N) return 1;  // full space
    const FieldMatrix H = kernel(c.generator());
    // smallest w with w dependent columns of H; bounded by N - k + 1
    for (size_t w = 1; w <= N; ++w) {
        std::vector<size_t> idx(w);
        for (size_t i = 0; i < w; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            if (rank(select_cols(H, idx)) < w) return w;
            more = false;
            for (size_t i = w; i-- > 0;) {
                if (idx[i] != i + N - w) {
                    ++idx[i];
                    for (size_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    return N;  // unreachable for k < N
}

LinearCode dual(const LinearCode& c) { return LinearCode(kernel(c.generator())); }

LinearCode extend(const LinearCode& c, std::span<const FieldElement> t) {
    if (t.size() != c.length()) throw std::invalid_argument("code: extension weight vector length mismatch");
    const FieldSpec& f = c.spec();
    const FieldMatrix& G = c.generator();
    FieldMatrix col(f, c.dimension(), 1);
    for (size_t r = 0; r < c.dimension(); ++r) {
        uint32_t acc = 0;
        for (size_t j = 0; j < c.length(); ++j) acc = f.add(acc, f.mul(G.raw(r, j), t[j].value()));
        col.set_raw(r, 0, acc);
    }
    return LinearCode(hconcat(G, col));
}

LinearCode puncture(const LinearCode& c, size_t position) {
    if (position >= c.length()) throw std::invalid_argument("code: puncture position out of range");
    std::vector<size_t> keep;
    keep.reserve(c.length() - 1);
    for (size_t j = 0; j < c.length(); ++j)
        if (j != position) keep.push_back(j);
    FieldMatrix G = select_cols(c.generator(), keep);
    if (rank(G) != c.dimension())
        throw std::invalid_argument("code: puncturing at position " + std::to_string(position) + " drops the rank");
    return LinearCode(std::move(G));
}

LinearCode schur_product(const LinearCode& a, const LinearCode& b) {
    if (&a.spec() != &b.spec()) throw std::invalid_argument("code: Schur product over different fields");
    if (a.length() != b.length()) throw std::invalid_argument("code: Schur product length mismatch");
    const FieldSpec& f = a.spec();
    const bool square = &a.generator() == &b.generator();
    std::vector<std::vector<FieldElement>> prods;
    for (size_t i = 0; i < a.dimension(); ++i)
        for (size_t j = square ? i : 0; j < b.dimension(); ++j) {
            std::vector<FieldElement> row;
            row.reserve(a.length());
            for (size_t cidx = 0; cidx < a.length(); ++cidx)
                row.emplace_back(f, f.mul(a.generator().raw(i, cidx), b.generator().raw(j, cidx)));
            prods.push_back(std::move(row));
        }
    FieldMatrix span = FieldMatrix::from_rows(f, prods);
    FieldMatrix red = rref(span);
    const size_t r = rank(red);
    std::vector<size_t> rows_idx(r);
    for (size_t i = 0; i < r; ++i) rows_idx[i] = i;
    std::vector<size_t> cols_idx(a.length());
    for (size_t i = 0; i < cols_idx.size(); ++i) cols_idx[i] = i;
    return LinearCode(select(red, rows_idx, cols_idx));
}

LinearCode schur_square(const LinearCode& c) { return schur_product(c, c); }

LinearCode grs_code(std::span<const FieldElement> alpha, std::span<const FieldElement> v, size_t k) {
    if (alpha.empty() || k == 0 || k > alpha.size())
        throw std::invalid_argument("code: GRS needs 1 <= k <= number of points");
    if (v.size() != alpha.size()) throw std::invalid_argument("code: GRS multiplier count mismatch");
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (v[i].is_zero()) throw std::invalid_argument("code: GRS multiplier at position " + std::to_string(i) + " is zero");
        for (size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] == alpha[j])
                throw std::invalid_argument("code: GRS evaluation points must be distinct");
    }
    return LinearCode(scale_cols(vandermonde(alpha, k), v));
}

bool same_row_space(const LinearCode& a, const LinearCode& b) {
    if (&a.spec() != &b.spec() || a.length() != b.length() || a.dimension() != b.dimension()) return false;
    return rref(a.generator()) == rref(b.generator());
}

}  // namespace etgrs
