#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etgrs/code.hpp"
#include "oracles.hpp"

using namespace etgrs;

namespace {
LinearCode all_ones_code(const FieldSpec& f, size_t n) {
    FieldMatrix g(f, 1, n);
    for (size_t j = 0; j < n; ++j) g.set_raw(0, j, 1);
    return LinearCode(std::move(g));
}

LinearCode random_code(const FieldSpec& f, size_t k, size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> d(0, f.q() - 1);
    while (true) {
        FieldMatrix g(f, k, n);
        for (size_t r = 0; r < k; ++r)
            for (size_t c = 0; c < n; ++c) g.set_raw(r, c, d(rng));
        if (rank(g) == k) return LinearCode(std::move(g));
    }
}
}  // namespace

TEST_CASE("code construction") {
    const FieldSpec& f = FieldSpec::get(13);
    LinearCode c(FieldMatrix::identity(f, 3));
    CHECK(c.length() == 3);
    CHECK(c.dimension() == 3);

    FieldMatrix bad(f, 2, 4);
    for (size_t j = 0; j < 4; ++j) {
        bad.set_raw(0, j, (uint32_t)j + 1);
        bad.set_raw(1, j, (uint32_t)j + 1);
    }
    CHECK_THROWS_AS(LinearCode{bad}, std::invalid_argument);
}

TEST_CASE("minimum distance basics") {
    const FieldSpec& f = FieldSpec::get(13);
    CHECK(min_distance(LinearCode(FieldMatrix::identity(f, 3))) == 1);
    CHECK(min_distance(all_ones_code(f, 4)) == 4);
}

TEST_CASE("minimum distance equals the naive enumeration") {
    std::mt19937 rng(71);
    for (const FieldSpec* f : {&FieldSpec::get(7), &FieldSpec::get(2, 3), &FieldSpec::get(3, 2)}) {
        for (int trial = 0; trial < 15; ++trial) {
            std::uniform_int_distribution<size_t> dk(1, 3), dn(3, 7);
            const size_t k = dk(rng);
            const size_t n = std::max(dn(rng), k);
            LinearCode c = random_code(*f, k, n, rng);
            CHECK(min_distance(c) == oracles::min_distance_naive(c));
        }
    }
}

TEST_CASE("minimum distance equals the column-dependency oracle") {
    std::mt19937 rng(73);
    for (const FieldSpec* f : {&FieldSpec::get(13), &FieldSpec::get(2, 3)}) {
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<size_t> dk(1, 4), dn(4, 10);
            const size_t k = dk(rng);
            const size_t n = std::max(dn(rng), k);
            LinearCode c = random_code(*f, k, n, rng);
            CHECK(min_distance(c) == min_distance_by_column_rank(c));
        }
    }
}

TEST_CASE("budget") {
    const FieldSpec& f = FieldSpec::get(13);
    std::mt19937 rng(79);
    LinearCode c = random_code(f, 3, 5, rng);
    CHECK_THROWS_AS(min_distance(c, 100), BudgetExceeded);
    CHECK(min_distance(c, 13 * 13 * 13) >= 1);
}

TEST_CASE("dual") {
    std::mt19937 rng(83);
    const FieldSpec& f = FieldSpec::get(13);
    LinearCode c = random_code(f, 3, 8, rng);
    LinearCode d = dual(c);
    CHECK(d.dimension() == 5);
    CHECK(d.length() == 8);
    FieldMatrix prod = matmul(c.generator(), transpose(d.generator()));
    for (size_t r = 0; r < prod.rows(); ++r)
        for (size_t cc = 0; cc < prod.cols(); ++cc) CHECK(prod.raw(r, cc) == 0);
    CHECK(same_row_space(dual(d), c));

    LinearCode full(FieldMatrix::identity(f, 4));
    CHECK(dual(full).dimension() == 0);
    CHECK_THROWS_AS(min_distance(dual(full)), std::invalid_argument);
}

TEST_CASE("extend") {
    const FieldSpec& f = FieldSpec::get(13);
    LinearCode c(FieldMatrix::identity(f, 3));
    std::vector<FieldElement> zeros(3, zero(f)), ones(3, one(f));
    LinearCode e0 = extend(c, zeros);
    CHECK(e0.length() == 4);
    for (size_t r = 0; r < 3; ++r) CHECK(e0.generator().raw(r, 3) == 0);
    LinearCode e1 = extend(c, ones);
    for (size_t r = 0; r < 3; ++r) CHECK(e1.generator().raw(r, 3) == 1);
    std::vector<FieldElement> wrong(2, one(f));
    CHECK_THROWS_AS(extend(c, wrong), std::invalid_argument);
}

TEST_CASE("puncture") {
    std::mt19937 rng(89);
    const FieldSpec& f = FieldSpec::get(11);
    LinearCode c = random_code(f, 2, 5, rng);
    std::vector<FieldElement> t;
    for (int i = 0; i < 5; ++i) t.push_back(oracles::random_element(f, rng));
    LinearCode ext = extend(c, t);
    LinearCode back = puncture(ext, 5);
    CHECK(back.generator() == c.generator());
    CHECK(puncture(c, 0).length() == 4);
    CHECK_THROWS_AS(puncture(c, 9), std::invalid_argument);
    CHECK_THROWS_AS(puncture(LinearCode(FieldMatrix::identity(f, 2)), 0), std::invalid_argument);
}

TEST_CASE("schur products") {
    const FieldSpec& f = FieldSpec::get(13);
    LinearCode ones = all_ones_code(f, 6);
    CHECK(same_row_space(schur_square(ones), ones));

    // GRS square dimension 2k-1
    std::vector<FieldElement> alpha, v;
    for (uint32_t i = 0; i < 8; ++i) {
        alpha.emplace_back(f, i + 1);
        v.push_back(one(f));
    }
    LinearCode g3 = grs_code(alpha, v, 3);
    CHECK(schur_square(g3).dimension() == 5);

    std::mt19937 rng(97);
    LinearCode c = random_code(f, 2, 6, rng);
    CHECK(same_row_space(schur_product(c, ones), c));
    CHECK_THROWS_AS(schur_product(c, all_ones_code(f, 5)), std::invalid_argument);
}

TEST_CASE("classification from parameters") {
    CHECK(classify({8, 3, 6, std::nullopt}).verdict == Verdict::Mds);
    auto nmds = classify({8, 3, 5, 3});
    CHECK(nmds.verdict == Verdict::Nmds);
    CHECK_FALSE(nmds.nmds_undetermined);
    auto amds = classify({4, 2, 2, 1});
    CHECK(amds.verdict == Verdict::Amds);
    auto undet = classify({8, 3, 5, std::nullopt});
    CHECK(undet.verdict == Verdict::Amds);
    CHECK(undet.nmds_undetermined);
    CHECK(classify({8, 3, 4, std::nullopt}).verdict == Verdict::Other);
    CHECK_THROWS_AS(classify({8, 3, 7, std::nullopt}), std::invalid_argument);  // Singleton
    CHECK(to_string(Verdict::Mds) == "MDS");
}

TEST_CASE("GRS codes") {
    const FieldSpec& f = FieldSpec::get(13);
    std::vector<FieldElement> alpha = {FieldElement(f, 2), FieldElement(f, 3), FieldElement(f, 4)};
    std::vector<FieldElement> v(3, one(f));
    CHECK(min_distance(grs_code(alpha, v, 3)) == 1);  // k = n: full space
    CHECK(min_distance(grs_code(alpha, v, 1)) == 3);  // k = 1, v = 1: repetition

    std::vector<FieldElement> dup = {FieldElement(f, 2), FieldElement(f, 2)};
    CHECK_THROWS_AS(grs_code(dup, std::vector<FieldElement>(2, one(f)), 1), std::invalid_argument);
    std::vector<FieldElement> zv = {one(f), zero(f), one(f)};
    CHECK_THROWS_AS(grs_code(alpha, zv, 2), std::invalid_argument);

    // MDS property: d = n - k + 1 on random instances
    std::mt19937 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        for (const FieldSpec* fs : {&FieldSpec::get(13), &FieldSpec::get(2, 3)}) {
            std::uniform_int_distribution<size_t> dn(2, std::min<size_t>(7, fs->q()));
            const size_t n = dn(rng);
            std::uniform_int_distribution<size_t> dk(1, std::min<size_t>(3, n));
            const size_t k = dk(rng);
            auto pts = oracles::random_distinct(*fs, n, rng);
            std::vector<FieldElement> mult;
            for (size_t i = 0; i < n; ++i) mult.push_back(oracles::random_nonzero(*fs, rng));
            CHECK(min_distance(grs_code(pts, mult, k)) == n - k + 1);
        }
    }
}

TEST_CASE("Singleton bound on random codes") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        const FieldSpec& f = FieldSpec::get(7);
        std::uniform_int_distribution<size_t> dk(1, 3), dn(3, 8);
        const size_t k = dk(rng);
        const size_t n = std::max(dn(rng), k);
        LinearCode c = random_code(f, k, n, rng);
        CHECK(min_distance(c) <= n - k + 1);
    }
}
