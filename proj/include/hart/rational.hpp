#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <ostream>

#include <gmpxx.h>

namespace hart {

// Exact rational number. Values whose numerator and denominator fit in
// int64 are kept inline; anything larger spills into a GMP rational.
class Rational {
public:
    Rational() noexcept : n_(0), d_(1) {}
    Rational(int v) noexcept : n_(v), d_(1) {}
    Rational(long v) noexcept : n_(v), d_(1) {}
    Rational(long long v) noexcept : n_(v), d_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    // Parses "p", "-p", "p/q". Throws std::invalid_argument.
    static Rational parse(const std::string& s);

    bool is_zero() const noexcept { return !big_ && n_ == 0; }
    bool is_one() const noexcept { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const noexcept { return !big_; }

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string str() const;

    Rational operator-() const;
    Rational inv() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // a -= f*b, the inner loop of elimination.
    void sub_mul(const Rational& f, const Rational& b);

private:
    static Rational from_i128(__int128 num, __int128 den);
    void normalize_big();

    std::int64_t n_;
    std::int64_t d_;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hart
