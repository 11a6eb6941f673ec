#include "hermrc/rational.hpp"

#include <cctype>
#include <ostream>

namespace hermrc {

Rational Rational::from_string(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) -> Integer {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        const bool negative = s[0] == '-';
        if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);  // mpz rejects a leading '+'
        if (s.empty()) throw std::invalid_argument("sign without digits");
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad integer literal: " + std::string(s));
        Integer value(std::string(s), 10);
        return negative ? Integer(-value) : value;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text), Integer(1));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::pow(unsigned e) const {
    mpq_class out(1);
    mpq_class base = q_;
    for (unsigned bits = e; bits != 0; bits >>= 1) {
        if (bits & 1u) out *= base;
        if (bits > 1) base *= base;
    }
    return Rational(std::move(out));
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Rational binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace hermrc
