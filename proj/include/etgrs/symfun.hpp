#pragma once

#include <span>
#include <vector>

#include "etgrs/field.hpp"

namespace etgrs {

/// A set of pairwise-distinct evaluation points over one field; input to
/// the symmetric-function kernel (e_r, h_r, the interpolation weights u_i
/// and the delta quantities used by the classification conditions).
class SymContext {
  public:
    SymContext(const FieldSpec& spec, std::vector<FieldElement> values);

    const FieldSpec& spec() const { return *spec_; }
    const std::vector<FieldElement>& values() const { return values_; }
    size_t size() const { return values_.size(); }

  private:
    const FieldSpec* spec_;
    std::vector<FieldElement> values_;
};

/// Elementary symmetric polynomial e_r; e_0 = 1, e_r = 0 for r > size.
/// Computed by the product recurrence over prod(1 + a_i t).
FieldElement elem_sym(const SymContext& ctx, size_t r);

/// Complete homogeneous symmetric polynomial h_r; h_0 = 1. Computed by
/// the Newton recurrence sum_{i=0..r} (-1)^i e_i h_{r-i} = 0.
FieldElement complete_sym(const SymContext& ctx, size_t r);

/// Interpolation weights u_i = prod_{j != i} (a_i - a_j)^{-1}; size >= 2.
std::vector<FieldElement> u_weights(const SymContext& ctx);

/// sum_i a_i^h u_i, by literal summation. Equals 0 for h <= n-2 and
/// h_{h-n+1} for h >= n-1 (the power-sum weight identity).
FieldElement power_weight_sum(const SymContext& ctx, uint64_t h);

/// Delta quantity of the classification conditions, levels 2..5.
/// Production definition: delta(ctx, r) = complete_sym(ctx, r); this is
/// the value under which the determinant identities of the minor families
/// hold exactly (see sigma_formula_delta for the printed-formula variants).
FieldElement delta(const SymContext& ctx, int level);

/// Convention for evaluating the printed sigma-polynomial delta formulas:
/// Unsigned takes sigma_r = e_r, Signed takes sigma_r = (-1)^r e_r.
enum class SigmaConvention { Unsigned, Signed };

/// The printed delta formulas for levels 2..5, evaluated under the given
/// sigma convention. Neither convention reproduces h_r at every level
/// (levels 3 and 5 flip sign in opposite conventions); kept for the
/// machine-checked sign-resolution tests.
FieldElement sigma_formula_delta(const SymContext& ctx, int level, SigmaConvention conv);

}  // namespace etgrs
