#include "hart/matrix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hart {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : r_(rows), c_(cols), a_(std::move(entries)) {
    if (a_.size() != r_ * c_) throw std::invalid_argument("matrix entry count mismatch");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::size_t c = rows.empty() ? cols : rows[0].size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!(*this)(i, j).is_zero()) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), c_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(idx[i], j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < o.c_; ++j) {
                const Rational& y = o(k, j);
                if (!y.is_zero()) p(i, j).sub_mul(-x, y);
            }
        }
    return p;
}

Vec Matrix::operator*(const Vec& v) const {
    if (c_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec out(r_);
    for (std::size_t k = 0; k < c_; ++k) {
        if (v[k].is_zero()) continue;
        Rational nv = -v[k];
        for (std::size_t i = 0; i < r_; ++i) {
            const Rational& x = (*this)(i, k);
            if (!x.is_zero()) out[i].sub_mul(nv, x);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix s = *this;
    s += o;
    return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference shape mismatch");
    Matrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) s.a_[i] -= o.a_[i];
    return s;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix m = *this;
    for (auto& x : m.a_)
        if (!x.is_zero()) x *= s;
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

RrefResult rref(Matrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    RrefResult res;
    std::size_t prow = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < C && prow < R; ++c) {
        std::size_t sel = R;
        for (std::size_t i = prow; i < R; ++i)
            if (!m(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel == R) continue;
        if (sel != prow)
            for (std::size_t j = c; j < C; ++j) std::swap(m(sel, j), m(prow, j));
        Rational inv = m(prow, c).inv();
        nz.clear();
        for (std::size_t j = c; j < C; ++j)
            if (!m(prow, j).is_zero()) {
                if (!inv.is_one()) m(prow, j) *= inv;
                nz.push_back(j);
            }
        for (std::size_t i = 0; i < R; ++i) {
            if (i == prow) continue;
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j : nz) m(i, j).sub_mul(f, m(prow, j));
        }
        res.pivots.push_back(c);
        ++prow;
    }
    res.rank = res.pivots.size();
    res.reduced = std::move(m);
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < C; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix k(C, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) {
            const Rational& x = r.reduced(i, free[f]);
            if (!x.is_zero()) k(r.pivots[i], f) = -x;
        }
    }
    return k;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
    RrefResult r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
    return x;
}

std::optional<Matrix> solve_matrix(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    RrefResult r = rref(hstack(m, b));
    for (auto p : r.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.cols(), b.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, m.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    RrefResult r = rref(hstack(m, Matrix::identity(m.rows())));
    if (r.rank < m.rows() || r.pivots[m.rows() - 1] != m.rows() - 1) return std::nullopt;
    return r.reduced.block(0, m.cols(), m.rows(), m.rows());
}

Matrix column_space(const Matrix& m) {
    RrefResult r = rref(m);
    return m.select_columns(r.pivots);
}

std::vector<std::size_t> complement_units(const Matrix& sub, std::size_t ambient) {
    std::vector<std::size_t> out;
    if (sub.cols() == 0) {
        for (std::size_t j = 0; j < ambient; ++j) out.push_back(j);
        return out;
    }
    RrefResult r = rref(sub.transpose());
    std::vector<bool> piv(ambient, false);
    for (auto p : r.pivots) piv[p] = true;
    for (std::size_t j = 0; j < ambient; ++j)
        if (!piv[j]) out.push_back(j);
    return out;
}

std::vector<std::size_t> independent_extension(const Matrix& sub, const Matrix& candidates) {
    RrefResult r = rref(hstack(sub, candidates));
    std::vector<std::size_t> out;
    for (auto p : r.pivots)
        if (p >= sub.cols()) out.push_back(p - sub.cols());
    return out;
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
    if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0);
    Matrix k = kernel_basis(hstack(a, b));
    Matrix top = k.block(0, 0, a.cols(), k.cols());
    return column_space(a * top);
}

Matrix coordinates(const Matrix& basis, const Matrix& v) {
    auto x = solve_matrix(basis, v);
    if (!x) throw std::logic_error("coordinates: vector outside the span");
    return *x;
}

CoordinateSolver::CoordinateSolver(const Matrix& basis) : n_(basis.rows()), k_(basis.cols()) {
    RrefResult r = rref(hstack(basis, Matrix::identity(n_)));
    if (r.rank < k_ || (k_ > 0 && r.pivots[k_ - 1] != k_ - 1))
        throw std::invalid_argument("CoordinateSolver: basis columns are dependent");
    Matrix t = r.reduced.block(0, k_, n_, n_);
    left_ = t.block(0, 0, k_, n_);
    check_ = t.block(k_, 0, n_ - k_, n_);
}

std::optional<Vec> CoordinateSolver::coords(const Vec& v) const {
    if (v.size() != n_) throw std::invalid_argument("CoordinateSolver: length mismatch");
    Vec chk = check_ * v;
    for (const auto& x : chk)
        if (!x.is_zero()) return std::nullopt;
    return left_ * v;
}

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return poly_trim(c);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a0, const Poly& b0) {
    Poly a = poly_trim(a0), b = poly_trim(b0);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1);
    Rational lead_inv = b.back().inv();
    const std::size_t shift_max = a.size() - b.size();
    for (std::size_t s = shift_max + 1; s-- > 0;) {
        Rational c = a[s + b.size() - 1] * lead_inv;
        q[s] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < b.size(); ++j) a[s + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    return {poly_trim(q), poly_trim(a)};
}

Poly poly_gcd(const Poly& a0, const Poly& b0) {
    Poly a = poly_trim(a0), b = poly_trim(b0);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Rational li = a.back().inv();
    for (auto& c : a) c *= li;
    return a;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational v;
    for (std::size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
}

Matrix poly_eval(const Poly& p, const Matrix& m) {
    Matrix v(m.rows(), m.cols());
    for (std::size_t k = p.size(); k-- > 0;) {
        v = v * m;
        if (!p[k].is_zero())
            for (std::size_t i = 0; i < m.rows(); ++i) v(i, i) += p[k];
    }
    return v;
}

Poly minimal_polynomial(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // Krylov sequence I, m, m^2, ... in the space of matrices; the first
    // linear dependency gives the minimal polynomial.
    std::vector<Vec> powers;
    Matrix cur = Matrix::identity(n);
    for (std::size_t d = 0; d <= n; ++d) {
        powers.push_back(cur.entries());
        Matrix k = kernel_basis(Matrix::from_columns(powers, n * n));
        if (k.cols() > 0) {
            Vec c = k.col(0);
            Poly p(c.begin(), c.end());
            p = poly_trim(p);
            Rational li = p.back().inv();
            for (auto& x : p) x *= li;
            return p;
        }
        cur = cur * m;
    }
    throw std::logic_error("minimal polynomial: Cayley-Hamilton bound exceeded");
}

namespace {

std::vector<mpz_class> divisors(mpz_class v) {
    if (v < 0) v = -v;
    std::vector<mpz_class> primes;
    std::vector<int> exps;
    mpz_class x = v;
    for (mpz_class p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            int e = 0;
            while (x % p == 0) {
                x /= p;
                ++e;
            }
            primes.push_back(p);
            exps.push_back(e);
        }
        if (p > 1000000) throw std::runtime_error("rational root search: coefficient too large to factor");
    }
    if (x > 1) {
        primes.push_back(x);
        exps.push_back(1);
    }
    std::vector<mpz_class> out{1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::size_t sz = out.size();
        mpz_class pw = 1;
        for (int e = 1; e <= exps[i]; ++e) {
            pw *= primes[i];
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p0) {
    Poly p = poly_trim(p0);
    std::vector<std::pair<Rational, int>> roots;
    if (p.size() <= 1) return roots;
    int zero_mult = 0;
    while (p.size() > 1 && p[0].is_zero()) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.push_back({Rational(0), zero_mult});
    if (p.size() <= 1) return roots;
    // Primitive integer scaling.
    mpz_class l = 1;
    for (const auto& c : p) l = lcm(l, c.denominator());
    std::vector<mpz_class> ic;
    for (const auto& c : p) ic.push_back(c.numerator() * (l / c.denominator()));
    auto candidates_num = divisors(ic.front());
    auto candidates_den = divisors(ic.back());
    std::map<mpq_class, int> found;
    Poly rest = p;
    for (const auto& a : candidates_num)
        for (const auto& b : candidates_den)
            for (int s : {1, -1}) {
                Rational r(mpq_class(mpz_class(s * a), b));
                if (found.count(r.to_mpq())) continue;
                int mult = 0;
                while (rest.size() > 1 && poly_eval(rest, r).is_zero()) {
                    rest = poly_divmod(rest, Poly{-r, Rational(1)}).first;
                    ++mult;
                }
                if (mult) found[r.to_mpq()] = mult;
            }
    for (const auto& [q, m] : found) roots.push_back({Rational(q), m});
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return roots;
}

std::optional<std::vector<SpectralPiece>> split_spectrum(const Matrix& m) {
    Poly mu = minimal_polynomial(m);
    auto roots = rational_roots(mu);
    std::size_t deg = mu.size() - 1;
    if (roots.size() != deg) return std::nullopt;  // repeated or irrational roots
    std::vector<SpectralPiece> out;
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Matrix p = Matrix::identity(n);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i) continue;
            Matrix f = m;
            for (std::size_t t = 0; t < n; ++t) f(t, t) -= roots[j].first;
            p = (p * f).scaled((roots[i].first - roots[j].first).inv());
        }
        out.push_back({roots[i].first, p});
    }
    return out;
}

}  // namespace hart
