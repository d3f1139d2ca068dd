#include "etgrs/matrix.hpp"

#include <stdexcept>
#include <string>

namespace etgrs {

FieldMatrix::FieldMatrix(const FieldSpec& spec, size_t rows, size_t cols)
    : spec_(&spec), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(const FieldSpec& spec, size_t n) {
    FieldMatrix m(spec, n, n);
    for (size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

FieldMatrix FieldMatrix::from_rows(const FieldSpec& spec, const std::vector<std::vector<FieldElement>>& rows) {
    const size_t r = rows.size();
    const size_t c = r ? rows[0].size() : 0;
    FieldMatrix m(spec, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("matrix: ragged row list");
        for (size_t j = 0; j < c; ++j) {
            if (&rows[i][j].spec() != &spec) throw std::invalid_argument("matrix: entry from a different field");
            m.set_raw(i, j, rows[i][j].value());
        }
    }
    return m;
}

void FieldMatrix::set(size_t r, size_t c, const FieldElement& x) {
    if (&x.spec() != spec_) throw std::invalid_argument("matrix: entry from a different field");
    v_[r * cols_ + c] = x.value();
}

std::vector<FieldElement> FieldMatrix::row(size_t r) const {
    std::vector<FieldElement> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

std::vector<FieldElement> FieldMatrix::col(size_t c) const {
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

bool FieldMatrix::operator==(const FieldMatrix& o) const {
    return spec_ == o.spec_ && rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
}

std::string FieldMatrix::to_text() const {
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (c) s += ' ';
            s += std::to_string(raw(r, c));
        }
        s += '\n';
    }
    return s;
}

namespace {

// Forward elimination in place; returns (rank, det-sign-and-pivot-product).
// Pivot rule: leftmost unfinished column, first nonzero entry top-down.
struct ElimResult {
    size_t rank;
    uint32_t det;  // valid for square inputs only
};

ElimResult eliminate(FieldMatrix& m) {
    const FieldSpec& f = m.spec();
    const size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    uint32_t d = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m.raw(piv, c) == 0) ++piv;
        if (piv == rows) {
            d = 0;
            continue;
        }
        if (piv != r) {
            for (size_t j = 0; j < cols; ++j) {
                uint32_t t = m.raw(r, j);
                m.set_raw(r, j, m.raw(piv, j));
                m.set_raw(piv, j, t);
            }
            d = f.neg(d);
        }
        d = f.mul(d, m.raw(r, c));
        const uint32_t pinv = f.inv(m.raw(r, c));
        for (size_t i = r + 1; i < rows; ++i) {
            uint32_t factor = f.mul(m.raw(i, c), pinv);
            if (factor == 0) continue;
            for (size_t j = c; j < cols; ++j)
                m.set_raw(i, j, f.sub(m.raw(i, j), f.mul(factor, m.raw(r, j))));
        }
        ++r;
    }
    return {r, d};
}

}  // namespace

size_t rank(const FieldMatrix& m) {
    FieldMatrix w = m;
    return eliminate(w).rank;
}

FieldElement det(const FieldMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix: determinant of a non-square matrix");
    if (m.rows() == 0) return one(m.spec());
    FieldMatrix w = m;
    auto res = eliminate(w);
    if (res.rank < m.rows()) return zero(m.spec());
    return FieldElement(m.spec(), res.det);
}

FieldMatrix rref(const FieldMatrix& m) {
    const FieldSpec& f = m.spec();
    FieldMatrix w = m;
    const size_t rows = w.rows(), cols = w.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && w.raw(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = 0; j < cols; ++j) {
                uint32_t t = w.raw(r, j);
                w.set_raw(r, j, w.raw(piv, j));
                w.set_raw(piv, j, t);
            }
        const uint32_t pinv = f.inv(w.raw(r, c));
        for (size_t j = c; j < cols; ++j) w.set_raw(r, j, f.mul(w.raw(r, j), pinv));
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t factor = w.raw(i, c);
            if (factor == 0) continue;
            for (size_t j = c; j < cols; ++j)
                w.set_raw(i, j, f.sub(w.raw(i, j), f.mul(factor, w.raw(r, j))));
        }
        ++r;
    }
    return w;
}

FieldMatrix kernel(const FieldMatrix& m) {
    const FieldSpec& f = m.spec();
    FieldMatrix red = rref(m);
    const size_t cols = m.cols();
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (size_t r = 0; r < red.rows(); ++r) {
        size_t c = 0;
        while (c < cols && red.raw(r, c) == 0) ++c;
        if (c == cols) break;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<size_t> free_col;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_col.push_back(c);

    FieldMatrix out(f, free_col.size(), cols);
    for (size_t i = 0; i < free_col.size(); ++i) {
        const size_t fc = free_col[i];
        out.set_raw(i, fc, 1);
        for (size_t r = 0; r < pivot_col.size(); ++r) out.set_raw(i, pivot_col[r], f.neg(red.raw(r, fc)));
    }
    return out;
}

FieldMatrix vandermonde(std::span<const FieldElement> alpha, size_t rows) {
    if (alpha.empty()) throw std::invalid_argument("matrix: vandermonde needs at least one point");
    if (rows < 1) throw std::invalid_argument("matrix: vandermonde needs at least one row");
    const FieldSpec& f = alpha[0].spec();
    FieldMatrix m(f, rows, alpha.size());
    for (size_t j = 0; j < alpha.size(); ++j) {
        uint32_t acc = 1;
        for (size_t i = 0; i < rows; ++i) {
            m.set_raw(i, j, acc);
            acc = f.mul(acc, alpha[j].value());
        }
    }
    return m;
}

FieldMatrix select(const FieldMatrix& m, std::span<const size_t> row_idx, std::span<const size_t> col_idx) {
    FieldMatrix out(m.spec(), row_idx.size(), col_idx.size());
    for (size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= m.rows()) throw std::invalid_argument("matrix: row index out of range");
        for (size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] >= m.cols()) throw std::invalid_argument("matrix: column index out of range");
            out.set_raw(i, j, m.raw(row_idx[i], col_idx[j]));
        }
    }
    return out;
}

FieldMatrix select_cols(const FieldMatrix& m, std::span<const size_t> col_idx) {
    std::vector<size_t> all_rows(m.rows());
    for (size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    return select(m, all_rows, col_idx);
}

FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b) {
    if (&a.spec() != &b.spec()) throw std::invalid_argument("matrix: hconcat over different fields");
    if (a.rows() != b.rows()) throw std::invalid_argument("matrix: hconcat row count mismatch");
    FieldMatrix out(a.spec(), a.rows(), a.cols() + b.cols());
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < a.cols(); ++c) out.set_raw(r, c, a.raw(r, c));
        for (size_t c = 0; c < b.cols(); ++c) out.set_raw(r, a.cols() + c, b.raw(r, c));
    }
    return out;
}

FieldMatrix scale_cols(const FieldMatrix& m, std::span<const FieldElement> weights) {
    if (weights.size() != m.cols()) throw std::invalid_argument("matrix: weight count must equal column count");
    const FieldSpec& f = m.spec();
    FieldMatrix out = m;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (&weights[c].spec() != &f) throw std::invalid_argument("matrix: weight from a different field");
        for (size_t r = 0; r < m.rows(); ++r) out.set_raw(r, c, f.mul(m.raw(r, c), weights[c].value()));
    }
    return out;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    if (&a.spec() != &b.spec()) throw std::invalid_argument("matrix: matmul over different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix: matmul dimension mismatch");
    const FieldSpec& f = a.spec();
    FieldMatrix out(f, a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t kk = 0; kk < a.cols(); ++kk) {
            const uint32_t aik = a.raw(i, kk);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                out.set_raw(i, j, f.add(out.raw(i, j), f.mul(aik, b.raw(kk, j))));
        }
    return out;
}

std::vector<FieldElement> matvec(const FieldMatrix& m, std::span<const FieldElement> x) {
    if (x.size() != m.cols()) throw std::invalid_argument("matrix: matvec dimension mismatch");
    const FieldSpec& f = m.spec();
    std::vector<FieldElement> out;
    out.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        uint32_t acc = 0;
        for (size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.raw(r, c), x[c].value()));
        out.emplace_back(f, acc);
    }
    return out;
}

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix out(m.spec(), m.cols(), m.rows());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.set_raw(c, r, m.raw(r, c));
    return out;
}

}  // namespace etgrs
