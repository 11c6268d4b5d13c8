#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "resolvent/errors.hpp"
#include "resolvent/exactlin/rational.hpp"
#include "resolvent/exactlin/sparse_matrix.hpp"

using resolvent::exactlin::Rational;
using resolvent::exactlin::SparseMatrix;

namespace {

// Row-echelon rank on a dense copy; kept deliberately naive.
std::size_t dense_rank(const SparseMatrix& m) {
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c)) a[e.row][c] = e.value.to_mpq();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> v(-3, 3);
    std::vector<SparseMatrix::Triplet> t;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (u(rng) < density) t.emplace_back(i, j, Rational(v(rng)));
    return SparseMatrix::from_triplets(rows, cols, t);
}

SparseMatrix triangle_d1() {
    // edges 01, 02, 12 as columns; vertices as rows
    return SparseMatrix::from_triplets(3, 3, {{0, 0, -1}, {1, 0, 1}, {0, 1, -1}, {2, 1, 1}, {1, 2, -1}, {2, 2, 1}});
}

}  // namespace

TEST_CASE("rational normal form") {
    Rational q(6, -4);
    CHECK(q.to_string() == "-3/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS((void)Rational(0).inverse(), std::domain_error);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("rational promotion past 64 bits") {
    Rational big(INT64_MAX);
    Rational sq = big * big;
    CHECK_FALSE(sq.is_small());
    mpz_class expect(static_cast<long>(INT64_MAX));
    expect *= expect;
    CHECK(sq.numerator() == expect);
    Rational back = sq / big;
    CHECK(back.is_small());
    CHECK(back == big);
    Rational m(INT64_MIN);
    CHECK_FALSE(m.is_small());
    CHECK((-m).to_string() == "9223372036854775808");
}

TEST_CASE("rational arithmetic keeps lowest terms") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-1'000'000'007LL * 1000, 1'000'000'007LL * 1000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (b == 0 || e == 0) continue;
        Rational x(a, b), y(c, e);
        for (const Rational& r : {x + y, x - y, x * y}) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            CHECK(r.denominator() >= 1);
            CHECK((r.is_zero() ? r.denominator() == 1 : g == 1));
            mpq_class ref;
            ref = r.to_mpq();
            CHECK(ref.get_den() == r.denominator());
        }
        CHECK((x + y).to_mpq() == x.to_mpq() + y.to_mpq());
        CHECK((x * y).to_mpq() == x.to_mpq() * y.to_mpq());
        if (!y.is_zero()) CHECK((x / y).to_mpq() == x.to_mpq() / y.to_mpq());
    }
}

TEST_CASE("rank and kernel examples") {
    CHECK(rank(SparseMatrix::identity(3)) == 3);
    CHECK(kernel_dim(SparseMatrix::identity(3)) == 0);
    CHECK(rank(SparseMatrix(4, 5)) == 0);
    CHECK(kernel_dim(SparseMatrix(4, 5)) == 5);
    CHECK(rank(triangle_d1()) == 2);
    CHECK(kernel_dim(triangle_d1()) == 1);
    CHECK(rank(SparseMatrix()) == 0);
}

TEST_CASE("compose examples") {
    SparseMatrix m = triangle_d1();
    CHECK(compose(SparseMatrix::identity(3), m) == m);
    CHECK(compose(m, SparseMatrix(3, 2)).is_zero());
    CHECK_THROWS_AS((void)compose(m, SparseMatrix(2, 2)), resolvent::ShapeError);
    // full 2-simplex: d2 maps [012] to [12] - [02] + [01]
    SparseMatrix d2 = SparseMatrix::from_triplets(3, 1, {{0, 0, 1}, {1, 0, -1}, {2, 0, 1}});
    CHECK(compose(m, d2).is_zero());
}

TEST_CASE("set, get and duplicate triplets") {
    SparseMatrix m = SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 1, 2}, {1, 1, 3}});
    CHECK(m.nnz() == 1);
    CHECK(m.get(1, 1) == Rational(5));
    m.set(1, 1, 0);
    CHECK(m.is_zero());
    CHECK_THROWS_AS(m.set(2, 0, 1), resolvent::ShapeError);
}

TEST_CASE("rank agrees with dense elimination and with the transpose") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 14, c = 1 + rng() % 14;
        double density = 0.05 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        SparseMatrix m = random_sparse(rng, r, c, density);
        const std::size_t rk = rank(m);
        CHECK(rk == dense_rank(m));
        CHECK(rk == rank(m.transpose()));
    }
}

TEST_CASE("rank of a product is bounded by its factors") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t a = 1 + rng() % 10, b = 1 + rng() % 10, c = 1 + rng() % 10;
        SparseMatrix x = random_sparse(rng, a, b, 0.3), y = random_sparse(rng, b, c, 0.3);
        CHECK(rank(compose(x, y)) <= std::min(rank(x), rank(y)));
    }
}

TEST_CASE("low rank products of wide matrices") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        SparseMatrix x = random_sparse(rng, 40, 4, 0.6), y = random_sparse(rng, 4, 50, 0.6);
        SparseMatrix p = compose(x, y);
        CHECK(rank(p) == dense_rank(p));
        CHECK(rank(p) <= 4);
    }
}
