#pragma once

#include "hermrc/rational.hpp"

#include <iosfwd>
#include <string>

namespace hermrc {

/// True iff d is a positive square-free integer.
bool is_square_free(long d);

/// Element re + co*sqrt(-d) of the imaginary quadratic field Q(sqrt(-d)),
/// d positive and square-free. Arithmetic is closed and exact; mixing
/// elements of different fields is an error.
class QuadFieldElement {
public:
    QuadFieldElement(Rational re, Rational co, long d);

    /// Rational element of Q(sqrt(-d)).
    static QuadFieldElement real(Rational re, long d) { return {std::move(re), Rational(0), d}; }
    static QuadFieldElement zero(long d) { return real(Rational(0), d); }
    static QuadFieldElement one(long d) { return real(Rational(1), d); }

    const Rational& re() const { return re_; }
    const Rational& co() const { return co_; }
    long d() const { return d_; }

    bool is_zero() const { return re_.is_zero() && co_.is_zero(); }
    bool is_real() const { return co_.is_zero(); }

    QuadFieldElement conjugate() const { return {re_, -co_, d_}; }
    /// re^2 + d*co^2, the norm to Q; zero only for the zero element.
    Rational norm() const { return re_ * re_ + Rational(d_) * co_ * co_; }

    QuadFieldElement operator-() const { return {-re_, -co_, d_}; }
    QuadFieldElement& operator+=(const QuadFieldElement& o);
    QuadFieldElement& operator-=(const QuadFieldElement& o);
    QuadFieldElement& operator*=(const QuadFieldElement& o);
    QuadFieldElement& operator*=(const Rational& r);

    QuadFieldElement inverse() const;

    friend QuadFieldElement operator+(QuadFieldElement a, const QuadFieldElement& b) { return a += b; }
    friend QuadFieldElement operator-(QuadFieldElement a, const QuadFieldElement& b) { return a -= b; }
    friend QuadFieldElement operator*(QuadFieldElement a, const QuadFieldElement& b) { return a *= b; }
    friend QuadFieldElement operator*(QuadFieldElement a, const Rational& r) { return a *= r; }
    friend QuadFieldElement operator*(const Rational& r, QuadFieldElement a) { return a *= r; }
    friend QuadFieldElement operator/(const QuadFieldElement& a, const QuadFieldElement& b) {
        return a * b.inverse();
    }

    friend bool operator==(const QuadFieldElement& a, const QuadFieldElement& b) {
        return a.d_ == b.d_ && a.re_ == b.re_ && a.co_ == b.co_;
    }
    friend bool operator!=(const QuadFieldElement& a, const QuadFieldElement& b) { return !(a == b); }

    /// "re", "co*s" or "re+co*s" with s printed as sqrt(-d).
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadFieldElement& x);

private:
    void require_same_field(const QuadFieldElement& o) const;

    Rational re_, co_;
    long d_;
};

}  // namespace hermrc
