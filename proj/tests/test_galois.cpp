#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "netcomp/galois.hpp"
#include "support/oracles.hpp"
#include "support/paper_data.hpp"

using namespace netcomp;
namespace td = netcomp::testdata;

TEST_CASE("prime field construction and arithmetic") {
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(65536), std::invalid_argument);
    CHECK_NOTHROW(PrimeField(65521));

    PrimeField f3(3);
    CHECK(f3.inv(2) == 2); // 2*2 = 4 = 1 mod 3
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.sub(0, 1) == 2);
    CHECK(f3.mul(2, 2) == 1);
    CHECK_THROWS_AS(f3.inv(0), std::domain_error);

    PrimeField f65521(65521);
    for (std::uint32_t a : {1u, 2u, 12345u, 65520u})
        CHECK(f65521.mul(a, f65521.inv(a)) == 1);
}

TEST_CASE("rank of the worked example matrices") {
    CHECK(rank(td::u23_m2()) == 2);
    CHECK(rank(FieldMatrix::identity(PrimeField(3), 4)) == 4);

    // independently: largest nonsingular minor of the 4x24 GF(2) matrix
    const FieldMatrix m = td::eq5_matrix();
    CHECK(oracles::minor_rank(m) == 4);
    CHECK(rank(m) == 4);
}

TEST_CASE("column submatrix selection") {
    const FieldMatrix i3 = FieldMatrix::identity(PrimeField(2), 3);
    CHECK(column_submatrix(i3, {1, 2}) ==
          FieldMatrix::from_rows(PrimeField(2), {{1, 0}, {0, 1}, {0, 0}}));

    const FieldMatrix m = td::eq5_matrix();
    CHECK(column_submatrix(m, {9, 11}) ==
          FieldMatrix::from_rows(PrimeField(2), {{1, 0}, {0, 0}, {0, 1}, {0, 0}}));

    const FieldMatrix empty = column_submatrix(m, {});
    CHECK(empty.rows() == 4);
    CHECK(empty.cols() == 0);
    CHECK(rank(empty) == 0);

    CHECK_THROWS_AS(column_submatrix(i3, {4}), std::out_of_range);
    CHECK_THROWS_AS(column_submatrix(i3, {0}), std::out_of_range);

    // duplicates and order preserved
    const FieldMatrix dup = column_submatrix(i3, {2, 2, 1});
    CHECK(dup.column(1) == dup.column(2));
    CHECK(dup.column(3) == Column{1, 0, 0});
}

TEST_CASE("solve_right on the GF(3) decoding system") {
    const FieldMatrix m = td::eq6_matrix();
    const FieldMatrix a = column_submatrix(m, {9, 10, 11});
    const auto x = solve_right(a, {1, 0, 1, 0});
    REQUIRE(x.has_value());
    CHECK(*x == Column{2, 2, 2});
    // cross-check: 2*(sum of the three columns) is the demand
    PrimeField f3(3);
    Column sum(4, 0);
    for (std::size_t j = 1; j <= 3; ++j) sum = add_columns(f3, sum, a.column(j));
    CHECK(scale_column(f3, 2, sum) == Column{1, 0, 1, 0});
}

TEST_CASE("solve_right trivial and unsatisfiable cases") {
    const FieldMatrix i4 = FieldMatrix::identity(PrimeField(2), 4);
    const Column b{0, 1, 1, 0};
    auto x = solve_right(i4, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    const FieldMatrix zero(PrimeField(2), 1, 1);
    CHECK_FALSE(solve_right(zero, {1}).has_value());

    CHECK_THROWS_AS(solve_right(i4, {1, 0}), std::invalid_argument);
}

TEST_CASE("full_rank_row_basis drops dependent rows, first wins") {
    const FieldMatrix dup = FieldMatrix::from_rows(PrimeField(2), {{1, 0}, {1, 0}});
    CHECK(full_rank_row_basis(dup) ==
          FieldMatrix::from_rows(PrimeField(2), {{1, 0}}));

    const FieldMatrix m = td::eq5_matrix();
    CHECK(full_rank_row_basis(m) == m); // already full row rank

    const FieldMatrix tall =
        FieldMatrix::from_rows(PrimeField(3), {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    CHECK(full_rank_row_basis(tall) ==
          FieldMatrix::from_rows(PrimeField(3), {{1, 0}, {0, 1}}));
}

TEST_CASE("matrix arithmetic basics") {
    const FieldMatrix m = td::eq5_matrix();
    PrimeField f2(2);
    CHECK(add_columns(f2, m.column(9), m.column(11)) == Column{1, 0, 1, 0});

    const FieldMatrix a = td::u23_m2();
    CHECK(scale(0, a) == FieldMatrix(PrimeField(2), 2, 3));

    const FieldMatrix i2 = FieldMatrix::identity(PrimeField(2), 2);
    CHECK(matmul(i2, a) == a);
    CHECK_THROWS_AS(matmul(a, a), std::invalid_argument);
}

TEST_CASE("rank bounds, transpose symmetry and monotonicity on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        PrimeField f(trial % 2 == 0 ? 2 : 3);
        std::uniform_int_distribution<std::size_t> rdist(0, 6), cdist(0, 8);
        const FieldMatrix a = oracles::random_matrix(rng, f, rdist(rng), cdist(rng));
        const std::size_t r = rank(a);
        CHECK(r <= std::min(a.rows(), a.cols()));
        CHECK(rank(transpose(a)) == r);
        if (a.rows() <= 4 && a.cols() <= 8) CHECK(oracles::minor_rank(a) == r);
    }
}

TEST_CASE("rank monotonicity and submodularity, exhaustive subset pairs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        PrimeField f(trial % 2 == 0 ? 2 : 3);
        std::uniform_int_distribution<std::size_t> rdist(1, 5), cdist(1, 7);
        const std::size_t n = cdist(rng);
        const FieldMatrix a = oracles::random_matrix(rng, f, rdist(rng), n);
        std::vector<std::size_t> r(1u << n);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j)) cols.push_back(j + 1);
            r[mask] = rank(column_submatrix(a, cols));
        }
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            for (std::uint32_t t = 0; t < (1u << n); ++t) {
                if ((s & t) == s) CHECK(r[s] <= r[t]);
                CHECK(r[s | t] + r[s & t] <= r[s] + r[t]);
            }
        }
    }
}

TEST_CASE("solve_right solutions always satisfy the system") {
    std::mt19937 rng(13);
    int solved = 0;
    for (int trial = 0; trial < 300; ++trial) {
        PrimeField f(trial % 3 == 0 ? 5 : (trial % 2 == 0 ? 2 : 3));
        std::uniform_int_distribution<std::size_t> rdist(1, 5), cdist(1, 6);
        const FieldMatrix a = oracles::random_matrix(rng, f, rdist(rng), cdist(rng));
        Column b(a.rows());
        std::uniform_int_distribution<std::uint32_t> vdist(0, f.p() - 1);
        for (auto& v : b) v = vdist(rng);
        auto x = solve_right(a, b);
        if (!x) continue;
        ++solved;
        FieldMatrix xv = FieldMatrix::from_columns(f, a.cols(), {*x});
        CHECK(matmul(a, xv).column(1) == b);
    }
    CHECK(solved > 50);
}

TEST_CASE("row basis preserves the column rank function") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 48; ++trial) {
        PrimeField f(trial % 2 == 0 ? 2 : 3);
        // exhaustive over every column subset, up to 12 columns wide
        std::uniform_int_distribution<std::size_t> rdist(1, 7), cdist(1, 8);
        const std::size_t n = trial < 40 ? cdist(rng) : 9 + trial % 4;
        const FieldMatrix a = oracles::random_matrix(rng, f, rdist(rng), n);
        const FieldMatrix b = full_rank_row_basis(a);
        CHECK(b.rows() == rank(a));
        bool all_equal = true;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < n; ++j)
                if (mask & (1u << j)) cols.push_back(j + 1);
            if (rank(column_submatrix(a, cols)) !=
                rank(column_submatrix(b, cols)))
                all_equal = false;
        }
        CHECK(all_equal);
    }
}
