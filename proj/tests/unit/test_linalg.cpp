#include <random>

#include "doctest.h"
#include "hart/matrix.hpp"

using namespace hart;

namespace {

Matrix M(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<Vec> r;
    for (auto row : rows) {
        Vec v;
        for (auto x : row) v.push_back(Rational(x));
        r.push_back(v);
    }
    return Matrix::from_rows(r);
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> d(-3, 3), z(0, 2);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = z(rng) == 0 ? Rational(0) : Rational(d(rng));
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays reduced and spills to big integers") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK((a + Rational(3, 2)).is_zero());
    Rational big(1);
    for (int i = 0; i < 80; ++i) big *= Rational(3);
    CHECK(!big.is_small());
    Rational back = big;
    for (int i = 0; i < 80; ++i) back /= Rational(3);
    CHECK(back.is_one());
    CHECK(back.is_small());
    CHECK(Rational::parse("10/-4") == Rational(-5, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("rref small cases") {
    auto r = rref(Matrix::identity(2));
    CHECK(r.reduced == Matrix::identity(2));
    CHECK(r.rank == 2);
    auto p = rref(M({{1, 2}, {2, 4}}));
    CHECK(p.reduced == M({{1, 2}, {0, 0}}));
    CHECK(p.pivots == std::vector<std::size_t>{0});
    auto s = rref(M({{0, 1}, {1, 0}}));
    CHECK(s.reduced == Matrix::identity(2));
}

TEST_CASE("kernel and solve conventions") {
    CHECK(kernel_basis(Matrix::identity(3)).cols() == 0);
    CHECK(kernel_basis(Matrix(2, 3)) == Matrix::identity(3));
    Matrix k = kernel_basis(M({{1, 1}}));
    CHECK(k == M({{-1}, {1}}));
    auto x = solve(M({{1, 1}}), Vec{Rational(2)});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(2));
    CHECK((*x)[1] == Rational(0));
    CHECK(!solve(M({{0}}), Vec{Rational(1)}));
}

TEST_CASE("split_spectrum") {
    auto s = split_spectrum(M({{1, 0}, {0, 2}}));
    REQUIRE(s);
    REQUIRE(s->size() == 2);
    CHECK((*s)[0].eigenvalue == Rational(1));
    CHECK((*s)[0].projector == M({{1, 0}, {0, 0}}));
    auto id = split_spectrum(Matrix::identity(3));
    REQUIRE(id);
    CHECK(id->size() == 1);
    CHECK(!split_spectrum(M({{0, 1}, {-1, 0}})));
    CHECK(!split_spectrum(M({{0, 1}, {0, 0}})));
}

TEST_CASE("property: rank-nullity, kernel, rref idempotence") {
    std::mt19937 rng(7);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        Matrix m = random_matrix(rng, r, c);
        auto red = rref(m);
        Matrix k = kernel_basis(m);
        CHECK(red.rank + k.cols() == c);
        CHECK((m * k).is_zero());
        CHECK(rref(red.reduced).reduced == red.reduced);
        Vec b(r);
        for (auto& x : b) x = Rational((int)(rng() % 5) - 2);
        auto sol = solve(m, b);
        if (sol) CHECK(m * *sol == b);
        else CHECK(rank(hstack(m, Matrix::from_columns({b}, r))) == red.rank + 1);
    }
}

TEST_CASE("property: spectral projectors") {
    std::mt19937 rng(11);
    int split = 0;
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + rng() % 4;
        // Conjugate a diagonal matrix by a random invertible one.
        Matrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = Rational((int)(rng() % 3) - 1);
        Matrix p = random_matrix(rng, n, n);
        auto pinv = inverse(p);
        if (!pinv) continue;
        Matrix m = p * d * *pinv;
        auto s = split_spectrum(m);
        REQUIRE(s);
        ++split;
        Matrix sum(n, n);
        for (std::size_t i = 0; i < s->size(); ++i) {
            const Matrix& e = (*s)[i].projector;
            CHECK(e * e == e);
            CHECK(m * e == e.scaled((*s)[i].eigenvalue));
            for (std::size_t j = 0; j < s->size(); ++j)
                if (i != j) CHECK((e * (*s)[j].projector).is_zero());
            sum += e;
        }
        CHECK(sum == Matrix::identity(n));
    }
    CHECK(split > 10);
}
