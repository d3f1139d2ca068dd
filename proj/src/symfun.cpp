#include "etgrs/symfun.hpp"

#include <stdexcept>

namespace etgrs {

SymContext::SymContext(const FieldSpec& spec, std::vector<FieldElement> values)
    : spec_(&spec), values_(std::move(values)) {
    for (size_t i = 0; i < values_.size(); ++i) {
        if (&values_[i].spec() != spec_) throw std::invalid_argument("symfun: value from a different field");
        for (size_t j = i + 1; j < values_.size(); ++j)
            if (values_[i] == values_[j])
                throw std::invalid_argument("symfun: values must be pairwise distinct (duplicate at positions " +
                                            std::to_string(i) + " and " + std::to_string(j) + ")");
    }
}

FieldElement elem_sym(const SymContext& ctx, size_t r) {
    const FieldSpec& f = ctx.spec();
    const size_t n = ctx.size();
    if (r == 0) return one(f);
    if (r > n) return zero(f);
    // coefficients of prod_i (1 + a_i t), degree grows one point at a time
    std::vector<uint32_t> coeff(n + 1, 0);
    coeff[0] = 1;
    size_t deg = 0;
    for (const auto& a : ctx.values()) {
        ++deg;
        for (size_t d = deg; d >= 1; --d) coeff[d] = f.add(coeff[d], f.mul(a.value(), coeff[d - 1]));
    }
    return FieldElement(f, coeff[r]);
}

FieldElement complete_sym(const SymContext& ctx, size_t r) {
    const FieldSpec& f = ctx.spec();
    if (r == 0) return one(f);
    const size_t n = ctx.size();
    if (n == 0) return zero(f);
    std::vector<uint32_t> e(std::min(r, n) + 1);
    for (size_t i = 0; i < e.size(); ++i) e[i] = elem_sym(ctx, i).value();
    std::vector<uint32_t> h(r + 1, 0);
    h[0] = 1;
    for (size_t d = 1; d <= r; ++d) {
        uint32_t acc = 0;
        for (size_t i = 1; i <= std::min(d, n); ++i) {
            uint32_t term = f.mul(e[i], h[d - i]);
            acc = (i % 2 == 1) ? f.add(acc, term) : f.sub(acc, term);
        }
        h[d] = acc;
    }
    return FieldElement(f, h[r]);
}

std::vector<FieldElement> u_weights(const SymContext& ctx) {
    const FieldSpec& f = ctx.spec();
    const auto& a = ctx.values();
    if (a.size() < 2) throw std::invalid_argument("symfun: u weights need at least two points");
    std::vector<FieldElement> out;
    out.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        uint32_t prod = 1;
        for (size_t j = 0; j < a.size(); ++j)
            if (j != i) prod = f.mul(prod, f.sub(a[i].value(), a[j].value()));
        out.emplace_back(f, f.inv(prod));
    }
    return out;
}

FieldElement power_weight_sum(const SymContext& ctx, uint64_t h) {
    const FieldSpec& f = ctx.spec();
    const auto u = u_weights(ctx);
    uint32_t acc = 0;
    for (size_t i = 0; i < ctx.size(); ++i)
        acc = f.add(acc, f.mul(f.pow(ctx.values()[i].value(), h), u[i].value()));
    return FieldElement(f, acc);
}

FieldElement delta(const SymContext& ctx, int level) {
    if (level < 2 || level > 5) throw std::invalid_argument("symfun: delta level must be in 2..5");
    return complete_sym(ctx, (size_t)level);
}

FieldElement sigma_formula_delta(const SymContext& ctx, int level, SigmaConvention conv) {
    if (level < 2 || level > 5) throw std::invalid_argument("symfun: delta level must be in 2..5");
    const FieldSpec& f = ctx.spec();
    auto sigma = [&](size_t r) {
        FieldElement e = elem_sym(ctx, r);
        if (conv == SigmaConvention::Signed && r % 2 == 1) return -e;
        return e;
    };
    const FieldElement s1 = sigma(1), s2 = sigma(2), s3 = sigma(3), s4 = sigma(4), s5 = sigma(5);
    const FieldElement two = one(f) + one(f);
    // the building blocks shared by levels 3..5
    const FieldElement d3 = s1 * s1 * s1 + s3 - two * s2 * s1;
    const FieldElement b4 = s2 * s1 * s1 + s4 - s2 * s2 - s3 * s1;
    switch (level) {
        case 2:
            return s1 * s1 - s2;
        case 3:
            return d3;
        case 4:
            return -b4 + s1 * d3;
        default: {
            const FieldElement b5 = s3 * s1 * s1 + s5 - s3 * s2 - s4 * s1;
            return -b5 + s2 * d3 + s1 * b4 - s1 * s1 * d3;
        }
    }
}

}  // namespace etgrs
