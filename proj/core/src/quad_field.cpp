#include "hermrc/quad_field.hpp"

#include <ostream>

namespace hermrc {

bool is_square_free(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

QuadFieldElement::QuadFieldElement(Rational re, Rational co, long d)
    : re_(std::move(re)), co_(std::move(co)), d_(d) {
    if (!is_square_free(d)) {
        throw std::invalid_argument("field parameter d must be positive and square-free, got " +
                                    std::to_string(d));
    }
}

void QuadFieldElement::require_same_field(const QuadFieldElement& o) const {
    if (d_ != o.d_) {
        throw std::invalid_argument("mixed quadratic fields: d=" + std::to_string(d_) + " vs d=" +
                                    std::to_string(o.d_));
    }
}

QuadFieldElement& QuadFieldElement::operator+=(const QuadFieldElement& o) {
    require_same_field(o);
    re_ += o.re_;
    co_ += o.co_;
    return *this;
}

QuadFieldElement& QuadFieldElement::operator-=(const QuadFieldElement& o) {
    require_same_field(o);
    re_ -= o.re_;
    co_ -= o.co_;
    return *this;
}

QuadFieldElement& QuadFieldElement::operator*=(const QuadFieldElement& o) {
    require_same_field(o);
    // (a + b s)(a' + b' s) with s^2 = -d
    const Rational a = re_, b = co_;
    re_ = a * o.re_ - Rational(d_) * b * o.co_;
    co_ = a * o.co_ + b * o.re_;
    return *this;
}

QuadFieldElement& QuadFieldElement::operator*=(const Rational& r) {
    re_ *= r;
    co_ *= r;
    return *this;
}

QuadFieldElement QuadFieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero field element");
    const Rational n = norm().inverse();
    return {re_ * n, -co_ * n, d_};
}

std::string QuadFieldElement::to_string() const {
    const std::string s = "sqrt(-" + std::to_string(d_) + ")";
    if (co_.is_zero()) return re_.to_string();
    std::string imag = (co_ == Rational(1)) ? s : (co_ == Rational(-1)) ? "-" + s
                                                                        : co_.to_string() + "*" + s;
    if (re_.is_zero()) return imag;
    if (co_.sign() > 0) return re_.to_string() + "+" + imag;
    return re_.to_string() + imag;
}

std::ostream& operator<<(std::ostream& os, const QuadFieldElement& x) {
    return os << x.to_string();
}

}  // namespace hermrc
