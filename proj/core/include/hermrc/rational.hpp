#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hermrc {

using Integer = mpz_class;

/// Arbitrary-precision rational, always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1. Backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}        // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : q_(num, den) { canonicalize(); }
    Rational(const Integer& num, const Integer& den) : q_(num, den) { canonicalize(); }

    static Rational from_string(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Rational pow(unsigned e) const;
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("rational inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    void canonicalize() {
        if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact binomial coefficient; zero for k < 0 or k > n.
Rational binomial(long n, long k);

}  // namespace hermrc
