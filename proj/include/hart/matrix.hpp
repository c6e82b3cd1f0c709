#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hart/rational.hpp"

namespace hart {

using Vec = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<Rational>& entries() const { return a_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);

    bool is_zero() const;
    bool is_identity() const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;

    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& s) const;
    Matrix& operator+=(const Matrix& o);

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}; one column per free variable,
// with a 1 in that free position and 0 in the other free positions.
Matrix kernel_basis(const Matrix& m);

// Particular solution with free variables set to 0, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Solves m X = b column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

// Basis (as columns) of the column space, chosen among the given columns.
Matrix column_space(const Matrix& m);

// Unit vectors e_j completing the column span of `sub` to the whole space,
// j increasing. Returned as the list of indices j.
std::vector<std::size_t> complement_units(const Matrix& sub, std::size_t ambient);

// Columns of `candidates` (in order) that extend span(sub) independently.
std::vector<std::size_t> independent_extension(const Matrix& sub, const Matrix& candidates);

// Basis of span(a) ∩ span(b), as columns.
Matrix intersect_spans(const Matrix& a, const Matrix& b);

// Coordinates of the columns of `v` in the basis given by the (independent)
// columns of `basis`. Throws if some column is outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& v);

// Precomputed coordinate extraction for a fixed basis.
class CoordinateSolver {
public:
    CoordinateSolver() = default;
    explicit CoordinateSolver(const Matrix& basis);
    std::optional<Vec> coords(const Vec& v) const;
    std::size_t dim() const { return k_; }

private:
    std::size_t n_ = 0, k_ = 0;
    Matrix left_;  // rref transform restricted to pivot rows
    Matrix check_; // rows that must vanish for membership
};

// Polynomials are coefficient vectors, constant term first.
using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(const Poly& a, const Poly& b);
Rational poly_eval(const Poly& p, const Rational& x);
Matrix poly_eval(const Poly& p, const Matrix& m);

// Minimal polynomial (monic) of a square matrix.
Poly minimal_polynomial(const Matrix& m);

// Distinct rational roots with multiplicities.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

struct SpectralPiece {
    Rational eigenvalue;
    Matrix projector;
};

// Spectral projectors when the minimal polynomial is squarefree and splits
// over the rationals; nullopt otherwise.
std::optional<std::vector<SpectralPiece>> split_spectrum(const Matrix& m);

}  // namespace hart
