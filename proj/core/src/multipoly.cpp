#include "hermrc/multipoly.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <algorithm>
#include <ostream>
#include <sstream>

namespace hermrc {

char family_char(VarFamily f) {
    switch (f) {
        case VarFamily::W: return 'w';
        case VarFamily::Z: return 'z';
        case VarFamily::X: return 'x';
        case VarFamily::Y: return 'y';
    }
    throw std::logic_error("unknown variable family");
}

VarFamily family_from_char(char c) {
    switch (c) {
        case 'w': return VarFamily::W;
        case 'z': return VarFamily::Z;
        case 'x': return VarFamily::X;
        case 'y': return VarFamily::Y;
        default: throw std::invalid_argument(std::string("unknown variable family '") + c + "'");
    }
}

VarId var_w(int r, int c) { return {VarFamily::W, r, c}; }
VarId var_z(int r, int c) { return {VarFamily::Z, r, c}; }
VarId var_x(int r, int c) { return {VarFamily::X, r, c}; }
VarId var_y(int r, int c) { return {VarFamily::Y, r, c}; }

std::string var_name(const VarId& v) {
    std::ostringstream os;
    os << family_char(v.family) << '[' << v.row << ',' << v.col << ']';
    return os.str();
}

Monomial Monomial::variable(VarId v, int exponent) {
    Monomial m;
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent > 0) m.f_.emplace_back(v, exponent);
    return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!m.f_.empty() && m.f_.back().first == v)
            m.f_.back().second += e;
        else
            m.f_.emplace_back(v, e);
    }
    return m;
}

int Monomial::exponent_of(const VarId& v) const {
    for (const auto& [var, e] : f_)
        if (var == v) return e;
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [var, e] : f_) d += e;
    return d;
}

int Monomial::degree_in(VarFamily family) const {
    int d = 0;
    for (const auto& [var, e] : f_)
        if (var.family == family) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin();
    auto b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->first < b->first)
            out.f_.push_back(*a++);
        else if (b->first < a->first)
            out.f_.push_back(*b++);
        else {
            out.f_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    out.f_.insert(out.f_.end(), a, f_.end());
    out.f_.insert(out.f_.end(), b, o.f_.end());
    return out;
}

Monomial Monomial::divide_by(const VarId& v) const {
    Monomial out = *this;
    for (auto it = out.f_.begin(); it != out.f_.end(); ++it) {
        if (it->first == v) {
            if (--it->second == 0) out.f_.erase(it);
            return out;
        }
    }
    throw std::logic_error("monomial not divisible by " + var_name(v));
}

MultiPoly MultiPoly::constant(Rational c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial(), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(VarId v) { return term(Monomial::variable(v), Rational(1)); }

MultiPoly MultiPoly::term(Monomial m, Rational c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int MultiPoly::degree_in(VarFamily family) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(family));
    return d;
}

std::set<VarId> MultiPoly::variables() const {
    std::set<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.insert(v);
    return vars;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    // Iterate the smaller operand outside; accumulation prunes cancellations.
    const MultiPoly& outer = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ma, ca] : outer.terms_)
        for (const auto& [mb, cb] : inner.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out = constant(Rational(1));
    MultiPoly base = *this;
    for (unsigned bits = e; bits != 0; bits >>= 1) {
        if (bits & 1u) out *= base;
        if (bits > 1) base *= base;
    }
    return out;
}

MultiPoly MultiPoly::derivative(const VarId& v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent_of(v);
        if (e == 0) continue;
        out.add_term(m.divide_by(v), c * Rational(e));
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& map) const {
    // Powers of each replacement are cached across terms.
    std::map<VarId, std::vector<MultiPoly>> powers;
    auto power_of = [&](const VarId& v, int e) -> const MultiPoly& {
        auto& cache = powers[v];
        if (cache.empty()) {
            cache.push_back(MultiPoly::constant(Rational(1)));
            auto it = map.find(v);
            cache.push_back(it == map.end() ? MultiPoly::variable(v) : it->second);
        }
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
        return cache[static_cast<std::size_t>(e)];
    };

    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        MultiPoly factor = MultiPoly::constant(c);
        for (const auto& [v, e] : m.factors()) factor *= power_of(v, e);
        out += factor;
    }
    return out;
}

QuadFieldElement MultiPoly::evaluate(const std::map<VarId, QuadFieldElement>& point, long d) const {
    QuadFieldElement acc = QuadFieldElement::zero(d);
    for (const auto& [m, c] : terms_) {
        QuadFieldElement value = QuadFieldElement::real(c, d);
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("unassigned variable " + var_name(v) + " in evaluation");
            for (int i = 0; i < e; ++i) value *= it->second;
        }
        acc += value;
    }
    return acc;
}

Rational MultiPoly::evaluate_rational(const std::map<VarId, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("unassigned variable " + var_name(v) + " in evaluation");
            value *= it->second.pow(static_cast<unsigned>(e));
        }
        acc += value;
    }
    return acc;
}

std::string MultiPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit_coef = (mag == Rational(1)) && !m.is_unit();
        if (!unit_coef) os << mag.to_string();
        bool need_star = !unit_coef;
        for (const auto& [v, e] : m.factors()) {
            if (need_star) os << '*';
            os << var_name(v);
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent reader for the canonical text form. Accepts what
// to_text produces plus optional whitespace and missing '*' after a sign.
class TextReader {
public:
    explicit TextReader(std::string_view s) : s_(s) {
        while (!s_.empty() && s_.back() == ' ') s_.remove_suffix(1);
    }

    MultiPoly parse() {
        skip_space();
        if (peek() == '0' && pos_ + 1 == s_.size()) return MultiPoly();
        MultiPoly out;
        bool negative = consume_sign();
        for (;;) {
            out += parse_term(negative);
            skip_space();
            if (pos_ == s_.size()) break;
            const char c = take();
            if (c == '+')
                negative = false;
            else if (c == '-')
                negative = true;
            else
                fail(std::string("unexpected character '") + c + "'");
            skip_space();
        }
        return out;
    }

private:
    MultiPoly parse_term(bool negative) {
        Rational coef(1);
        std::vector<Monomial::Factor> factors;
        bool expect_atom = true;
        while (expect_atom) {
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef *= parse_rational();
            } else if (is_family(peek())) {
                factors.push_back(parse_var());
            } else {
                fail("expected a coefficient or variable");
            }
            expect_atom = (pos_ < s_.size() && peek() == '*');
            if (expect_atom) ++pos_;
        }
        if (negative) coef = -coef;
        return MultiPoly::term(Monomial::from_factors(std::move(factors)), coef);
    }

    Rational parse_rational() {
        const Integer num = parse_integer();
        if (pos_ < s_.size() && peek() == '/') {
            ++pos_;
            return Rational(num, parse_integer());
        }
        return Rational(num);
    }

    Integer parse_integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)), 10);
    }

    Monomial::Factor parse_var() {
        const VarFamily fam = family_from_char(take());
        expect('[');
        const int row = static_cast<int>(parse_integer().get_si());
        expect(',');
        const int col = static_cast<int>(parse_integer().get_si());
        expect(']');
        int exp = 1;
        if (pos_ < s_.size() && peek() == '^') {
            ++pos_;
            exp = static_cast<int>(parse_integer().get_si());
        }
        return {VarId{fam, row, col}, exp};
    }

    static bool is_family(char c) { return c == 'w' || c == 'z' || c == 'x' || c == 'y'; }

    bool consume_sign() {
        if (pos_ < s_.size() && peek() == '-') {
            ++pos_;
            skip_space();
            return true;
        }
        if (pos_ < s_.size() && peek() == '+') {
            ++pos_;
            skip_space();
        }
        return false;
    }

    char peek() const {
        if (pos_ >= s_.size()) fail("unexpected end of input");
        return s_[pos_];
    }
    char take() {
        const char c = peek();
        ++pos_;
        return c;
    }
    void expect(char c) {
        if (take() != c) fail(std::string("expected '") + c + "'");
    }
    void skip_space() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad polynomial text at offset " + std::to_string(pos_) + ": " +
                                    why);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::from_text(std::string_view text) { return TextReader(text).parse(); }

nlohmann::json MultiPoly::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json vars = nlohmann::json::array();
        for (const auto& [v, e] : m.factors()) {
            vars.push_back({{"f", std::string(1, family_char(v.family))},
                            {"r", v.row},
                            {"c", v.col},
                            {"e", e}});
        }
        terms.push_back({{"coef", c.to_string()}, {"vars", std::move(vars)}});
    }
    return terms;
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a term array");
    MultiPoly out;
    for (const auto& term : j) {
        const Rational coef = Rational::from_string(term.at("coef").get<std::string>());
        std::vector<Monomial::Factor> factors;
        for (const auto& v : term.at("vars")) {
            const std::string fam = v.at("f").get<std::string>();
            if (fam.size() != 1) throw std::invalid_argument("bad family tag: " + fam);
            factors.emplace_back(
                VarId{family_from_char(fam[0]), v.at("r").get<int>(), v.at("c").get<int>()},
                v.at("e").get<int>());
        }
        out.add_term(Monomial::from_factors(std::move(factors)), coef);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_text(); }

}  // namespace hermrc
