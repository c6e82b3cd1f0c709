#include "hart/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hart {

namespace {

using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    mpz_class hi((unsigned long)(std::uint64_t)(u >> 64));
    mpz_class lo((unsigned long)(std::uint64_t)u);
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits(i128 v) { return v >= kMin64 && v <= kMax64; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : n_(0), d_(1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& q) : n_(0), d_(1) {
    big_ = std::make_unique<mpq_class>(q);
    big_->canonicalize();
    normalize_big();
}

Rational Rational::from_i128(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational();
    i128 g = gcd128(num, den);
    if (g != 1) {
        num /= g;
        den /= g;
    }
    Rational r;
    if (fits(num) && fits(den)) {
        r.n_ = (std::int64_t)num;
        r.d_ = (std::int64_t)den;
    } else {
        r.big_ = std::make_unique<mpq_class>(mpz_from_i128(num), mpz_from_i128(den));
        r.big_->canonicalize();
    }
    return r;
}

void Rational::normalize_big() {
    if (!big_) return;
    const mpz_class& num = big_->get_num();
    const mpz_class& den = big_->get_den();
    if (num.fits_slong_p() && den.fits_slong_p()) {
        n_ = num.get_si();
        d_ = den.get_si();
        big_.reset();
    }
}

Rational Rational::parse(const std::string& s) {
    auto trim = [](std::string t) {
        size_t a = t.find_first_not_of(" \t");
        size_t b = t.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        return t.substr(a, b - a + 1);
    };
    std::string t = trim(s);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto valid_int = [](const std::string& u) {
        size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i >= u.size()) return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') return false;
        return true;
    };
    size_t slash = t.find('/');
    std::string num = trim(t.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : trim(t.substr(slash + 1));
    if (num.empty() || den.empty() || !valid_int(num) || !valid_int(den))
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    mpz_class zn(num), zd(den);
    if (zd == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(mpq_class(zn, zd));
}

bool Rational::is_integer() const {
    if (!big_) return d_ == 1;
    return big_->get_den() == 1;
}

int Rational::sign() const {
    if (!big_) return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_i128(n_), mpz_from_i128(d_));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_from_i128(n_); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_from_i128(d_); }

std::string Rational::str() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    return from_i128(-(i128)n_, d_);
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) return Rational(mpq_class(1 / *big_));
    return from_i128(d_, n_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.d_ == 1 && b.d_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(a.n_, b.n_, &s)) {
                Rational r;
                r.n_ = s;
                return r;
            }
            return Rational::from_i128((i128)a.n_ + b.n_, 1);
        }
        if (a.d_ == b.d_) return Rational::from_i128((i128)a.n_ + b.n_, a.d_);
        return Rational::from_i128((i128)a.n_ * b.d_ + (i128)b.n_ * a.d_, (i128)a.d_ * b.d_);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.d_ == 1 && b.d_ == 1) {
            std::int64_t s;
            if (!__builtin_sub_overflow(a.n_, b.n_, &s)) {
                Rational r;
                r.n_ = s;
                return r;
            }
            return Rational::from_i128((i128)a.n_ - b.n_, 1);
        }
        if (a.d_ == b.d_) return Rational::from_i128((i128)a.n_ - b.n_, a.d_);
        return Rational::from_i128((i128)a.n_ * b.d_ - (i128)b.n_ * a.d_, (i128)a.d_ * b.d_);
    }
    return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (!a.big_ && !b.big_) {
        if (a.d_ == 1 && b.d_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(a.n_, b.n_, &p)) {
                Rational r;
                r.n_ = p;
                return r;
            }
        }
        return Rational::from_i128((i128)a.n_ * b.n_, (i128)a.d_ * b.d_);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_zero()) return Rational();
    if (!a.big_ && !b.big_) return Rational::from_i128((i128)a.n_ * b.d_, (i128)a.d_ * b.n_);
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    // Both sides are canonical, and a value that fits inline is never big.
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return (i128)a.n_ * b.d_ < (i128)b.n_ * a.d_;
    return a.to_mpq() < b.to_mpq();
}

void Rational::sub_mul(const Rational& f, const Rational& b) {
    if (f.is_zero() || b.is_zero()) return;
    if (!big_ && !f.big_ && !b.big_ && d_ == 1 && f.d_ == 1 && b.d_ == 1) {
        std::int64_t p, s;
        if (!__builtin_mul_overflow(f.n_, b.n_, &p) && !__builtin_sub_overflow(n_, p, &s)) {
            n_ = s;
            return;
        }
    }
    *this = *this - f * b;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hart
