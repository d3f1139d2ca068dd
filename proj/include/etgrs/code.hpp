#pragma once

#include <optional>
#include <span>
#include <string>

#include "etgrs/matrix.hpp"

namespace etgrs {

constexpr uint64_t kDefaultBudget = 1ull << 24;

enum class Verdict { Mds, Nmds, Amds, Other };

std::string to_string(Verdict v);

/// Length / dimension / distance tuple; dual distance optional.
struct CodeParams {
    size_t length;
    size_t dimension;
    size_t min_distance;
    std::optional<size_t> dual_min_distance;
};

struct ClassifyResult {
    Verdict verdict;
    /// True when d = length - dimension but the dual distance was not
    /// supplied, so AMDS codes cannot be separated from NMDS ones.
    bool nmds_undetermined = false;
};

/// MDS iff d = N-k+1; for d = N-k, NMDS iff the dual distance equals k,
/// plain AMDS otherwise; anything below is Other.
ClassifyResult classify(const CodeParams& p);

/// Linear code given by a full-row-rank generator matrix, stored verbatim
/// (no canonicalization) so displayed matrices match their construction.
/// A 0 x N matrix represents the zero code (the dual of the full space).
class LinearCode {
  public:
    explicit LinearCode(FieldMatrix gen);

    const FieldSpec& spec() const { return gen_.spec(); }
    size_t length() const { return gen_.cols(); }
    size_t dimension() const { return gen_.rows(); }
    const FieldMatrix& generator() const { return gen_; }

  private:
    FieldMatrix gen_;
};

LinearCode code_from_generator(FieldMatrix gen);

/// Minimum Hamming weight over all nonzero codewords, by exhaustive
/// message enumeration. Requires q^dimension <= budget. The enumeration
/// visits one representative per scalar class (first nonzero message
/// digit fixed to 1), which leaves the result unchanged.
size_t min_distance(const LinearCode& c, uint64_t budget = kDefaultBudget);

/// Independent route: d equals the smallest w such that some w columns of
/// a parity-check matrix are linearly dependent.
size_t min_distance_by_column_rank(const LinearCode& c);

LinearCode dual(const LinearCode& c);
LinearCode extend(const LinearCode& c, std::span<const FieldElement> t);
LinearCode puncture(const LinearCode& c, size_t position);

/// Span of all pairwise coordinatewise products of generator rows;
/// generator is the reduced-echelon basis of that span.
LinearCode schur_product(const LinearCode& a, const LinearCode& b);
LinearCode schur_square(const LinearCode& c);

LinearCode grs_code(std::span<const FieldElement> alpha, std::span<const FieldElement> v, size_t k);

bool same_row_space(const LinearCode& a, const LinearCode& b);

}  // namespace etgrs
