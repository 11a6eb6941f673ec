#pragma once

#include "hermrc/quad_field.hpp"
#include "hermrc/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hermrc {

/// Variable families: the n x n matrix entries W, Z and the n x k entries X, Y.
enum class VarFamily : std::uint8_t { W = 0, Z = 1, X = 2, Y = 3 };

char family_char(VarFamily f);
VarFamily family_from_char(char c);

/// One matrix-entry variable, e.g. w[1,2]. Rows and columns are 1-based.
struct VarId {
    VarFamily family;
    int row;
    int col;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

VarId var_w(int r, int c);
VarId var_z(int r, int c);
VarId var_x(int r, int c);
VarId var_y(int r, int c);

std::string var_name(const VarId& v);

/// Product of variable powers, stored as (VarId, exponent) pairs sorted by
/// variable with all exponents positive. The empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    static Monomial variable(VarId v, int exponent = 1);
    /// Builds from an arbitrary factor list; merges duplicates, drops zeros.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_unit() const { return f_.empty(); }
    int exponent_of(const VarId& v) const;
    int degree() const;
    int degree_in(VarFamily family) const;

    Monomial times(const Monomial& o) const;
    /// Divides by v once; requires exponent_of(v) > 0.
    Monomial divide_by(const VarId& v) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    /// Canonical total order: lexicographic on the sorted factor sequences.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }

private:
    std::vector<Factor> f_;
};

/// Sparse multivariate polynomial over Rational in the W/Z/X/Y matrix-entry
/// variables. Terms are kept in a canonical order with no zero coefficients;
/// all operations are pure and exact.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    static MultiPoly constant(Rational c);
    static MultiPoly variable(VarId v);
    static MultiPoly term(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial()); }

    int total_degree() const;
    int degree_in(VarFamily family) const;
    std::set<VarId> variables() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// Formal partial derivative with respect to v.
    MultiPoly derivative(const VarId& v) const;

    /// Simultaneous substitution; variables absent from the map stay themselves.
    MultiPoly substitute(const std::map<VarId, MultiPoly>& map) const;

    /// Exact evaluation in Q(sqrt(-d)); every variable must be assigned.
    QuadFieldElement evaluate(const std::map<VarId, QuadFieldElement>& point, long d) const;
    /// Exact evaluation over Q; every variable must be assigned.
    Rational evaluate_rational(const std::map<VarId, Rational>& point) const;

    /// Canonical text form, e.g. "3/2*w[1,1]^2*z[2,1] - z[1,2]".
    std::string to_text() const;
    static MultiPoly from_text(std::string_view text);
    /// Canonical JSON term list: [{"coef":"p/q","vars":[{"f":"w","r":1,"c":1,"e":2},...]},...].
    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

}  // namespace hermrc
