#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "etgrs/field.hpp"

namespace etgrs {

/// Dense matrix over a single finite field, stored row-major as integer
/// encodings. Immutable-by-convention value type: operations return new
/// matrices. Elimination uses a fixed pivot rule (first nonzero entry in
/// the column, scanning top-down) so echelon forms, kernels and reports
/// are reproducible bit for bit.
class FieldMatrix {
  public:
    FieldMatrix(const FieldSpec& spec, size_t rows, size_t cols);  // zero-filled
    static FieldMatrix identity(const FieldSpec& spec, size_t n);
    static FieldMatrix from_rows(const FieldSpec& spec, const std::vector<std::vector<FieldElement>>& rows);

    const FieldSpec& spec() const { return *spec_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElement at(size_t r, size_t c) const { return FieldElement(*spec_, v_[r * cols_ + c]); }
    void set(size_t r, size_t c, const FieldElement& x);
    uint32_t raw(size_t r, size_t c) const { return v_[r * cols_ + c]; }
    void set_raw(size_t r, size_t c, uint32_t x) { v_[r * cols_ + c] = x; }

    std::vector<FieldElement> row(size_t r) const;
    std::vector<FieldElement> col(size_t c) const;

    bool operator==(const FieldMatrix& o) const;
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    /// One row per line, integer encodings separated by single spaces.
    std::string to_text() const;

  private:
    const FieldSpec* spec_;
    size_t rows_, cols_;
    std::vector<uint32_t> v_;
};

size_t rank(const FieldMatrix& m);
FieldElement det(const FieldMatrix& m);
FieldMatrix rref(const FieldMatrix& m);

/// Basis of {x : M x^T = 0}, one vector per row; cols(M) - rank(M) rows.
/// Canonical basis read off the reduced echelon form, ordered by free column.
FieldMatrix kernel(const FieldMatrix& m);

/// Rows 0..rows-1 are alpha^0, alpha^1, ...; entry (i, j) = alpha_j^i.
FieldMatrix vandermonde(std::span<const FieldElement> alpha, size_t rows);

FieldMatrix select(const FieldMatrix& m, std::span<const size_t> row_idx, std::span<const size_t> col_idx);
FieldMatrix select_cols(const FieldMatrix& m, std::span<const size_t> col_idx);
FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix scale_cols(const FieldMatrix& m, std::span<const FieldElement> weights);
FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);
std::vector<FieldElement> matvec(const FieldMatrix& m, std::span<const FieldElement> x);
FieldMatrix transpose(const FieldMatrix& m);

}  // namespace etgrs
