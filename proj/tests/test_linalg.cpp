#include <random>

#include "doctest.h"
#include "qtorus/linalg.hpp"

using namespace qtorus;

namespace {

// Plain rational Gaussian elimination.
std::size_t rank_oracle(std::vector<std::vector<Scalar>> A, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
        std::size_t p = r;
        while (p < A.size() && A[p][c].is_zero()) ++p;
        if (p == A.size()) continue;
        std::swap(A[p], A[r]);
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            const Scalar f = A[i][c] / A[r][c];
            for (std::size_t k = 0; k < cols; ++k) A[i][k] -= f * A[r][k];
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("nullspace of small matrices") {
    const std::vector<std::vector<Scalar>> A{{1, 2, 3}, {2, 4, 6}};
    const auto ns = nullspace(A, 3);
    CHECK(ns.size() == 2);
    CHECK(rank(A, 3) == 1);
    CHECK(nullspace({}, 2).size() == 2);
    CHECK(rank({{Scalar(1, 2), Scalar(1, 3)}, {Scalar(3), Scalar(2)}}, 2) == 1);
}

TEST_CASE("nullspace vectors are primitive, independent and complete") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 7;
        std::vector<std::vector<Scalar>> A(rows, std::vector<Scalar>(cols));
        for (auto& row : A)
            for (auto& x : row) x = rng() % 3 == 0 ? Scalar(0) : Scalar(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        if (t % 4 == 0) A.push_back(A.front());
        const auto ns = nullspace(A, cols);
        const std::size_t r = rank_oracle(A, cols);
        CHECK(rank(A, cols) == r);
        CHECK(ns.size() == cols - r);
        for (const auto& v : ns) {
            mpz_class g = 0;
            for (const auto& x : v) g = gcd(g, x);
            CHECK(g == 1);
            for (const auto& row : A) {
                Scalar s;
                for (std::size_t k = 0; k < cols; ++k) s += row[k] * Scalar(mpq_class(v[k]));
                CHECK(s.is_zero());
            }
        }
        std::vector<std::vector<Scalar>> N;
        for (const auto& v : ns) {
            std::vector<Scalar> row;
            for (const auto& x : v) row.emplace_back(mpq_class(x));
            N.push_back(row);
        }
        CHECK(rank_oracle(N, cols) == ns.size());
    }
}

TEST_CASE("incremental echelon reports independence") {
    IntegerEchelon ech(3);
    CHECK(ech.add_row(IntRow{2, 4, 6}));
    CHECK_FALSE(ech.add_row(IntRow{1, 2, 3}));
    CHECK(ech.add_row(std::vector<Scalar>{Scalar(1, 2), 0, 1}));
    CHECK(ech.rank() == 2);
    CHECK(ech.nullspace().size() == 1);
}
