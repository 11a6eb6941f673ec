#pragma once

#include "hermrc/generators.hpp"
#include "hermrc/multipoly.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <utility>
#include <vector>

namespace hermrc {

/// Exponent tuple alpha = (alpha_0,...,alpha_n) indexing the monomial
/// Q_0^{alpha_0} ... Q_n^{alpha_n}. Ordered lexicographically left to right.
struct IndexTuple {
    std::vector<int> alpha;

    int sum() const;
    friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
};

/// All tuples of length n+1 with entries >= 0 summing to v, in increasing
/// lexicographic order; the first is (0,...,0,v).
std::vector<IndexTuple> index_tuples(int n, int v);

enum class Normalization {
    unit,      // C(0,...,0,v) = 1
    integral,  // integer values, content 1, C(0,...,0,v) > 0
};

/// Solved bracket coefficients C(alpha) for fixed (n, v, k1, k2).
struct BracketCoefficients {
    int n = 0;
    int v = 0;
    int k1 = 0;
    int k2 = 0;
    Normalization normalization = Normalization::integral;
    std::map<IndexTuple, Rational> coeffs;

    const Rational& at(const IndexTuple& t) const;
    nlohmann::json to_json() const;
};

/// Solves the linear recurrence determining every C(alpha) from
/// C(0,...,0,v) = 1, walking tuples in increasing lexicographic order. For
/// each alpha with least positive index m, the pivot multiplier is
/// alpha_m*(k1 + alpha_m - n + m), nonzero whenever k1 >= n.
/// Throws std::invalid_argument("weight below matrix size") when k1 < n.
BracketCoefficients solve_coefficients(int n, int v, int k1, int k2,
                                       Normalization norm = Normalization::integral);

/// Q = sum_alpha C(alpha) * prod_j Q_j^{alpha_j}, expanded in the W,Z entries.
MultiPoly assemble_bracket(const BracketCoefficients& bc, const QGeneratorSet& gens);

/// Classical n=1 Rankin-Cohen coefficients (-1)^r binom(k1+v-1, s) binom(k2+v-1, r)
/// over r+s = v, normalized so the (0,v) entry is 1. Test oracle for the solver.
std::map<std::pair<int, int>, Rational> classical_rc_coefficients(int k1, int k2, int v);

}  // namespace hermrc
