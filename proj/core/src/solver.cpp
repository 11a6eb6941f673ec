#include "hermrc/solver.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace hermrc {

int IndexTuple::sum() const {
    int s = 0;
    for (int a : alpha) s += a;
    return s;
}

std::vector<IndexTuple> index_tuples(int n, int v) {
    std::vector<IndexTuple> out;
    std::vector<int> current(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            current[static_cast<std::size_t>(pos)] = remaining;
            out.push_back(IndexTuple{current});
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            current[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    rec(rec, 0, v);
    return out;
}

const Rational& BracketCoefficients::at(const IndexTuple& t) const {
    auto it = coeffs.find(t);
    if (it == coeffs.end()) throw std::out_of_range("coefficient index not in support");
    return it->second;
}

nlohmann::json BracketCoefficients::to_json() const {
    nlohmann::json coeff_list = nlohmann::json::array();
    for (const auto& [tuple, value] : coeffs) {
        coeff_list.push_back({{"alpha", tuple.alpha}, {"value", value.to_string()}});
    }
    return {{"n", n},
            {"v", v},
            {"k1", k1},
            {"k2", k2},
            {"normalization", normalization == Normalization::integral ? "integral" : "unit"},
            {"coefficients", std::move(coeff_list)}};
}

namespace {

// C(beta) with the convention C(beta) = 0 whenever some beta_j < 0.
Rational coeff_or_zero(const std::map<IndexTuple, Rational>& known, const std::vector<int>& beta) {
    for (int b : beta)
        if (b < 0) return Rational(0);
    auto it = known.find(IndexTuple{beta});
    if (it == known.end()) throw std::logic_error("recurrence referenced an unsolved coefficient");
    return it->second;
}

std::vector<int> shifted(const std::vector<int>& alpha, int minus_a, int plus_b, int plus_c,
                         int minus_d) {
    std::vector<int> out = alpha;
    out[static_cast<std::size_t>(minus_a)] -= 1;
    out[static_cast<std::size_t>(plus_b)] += 1;
    out[static_cast<std::size_t>(plus_c)] += 1;
    out[static_cast<std::size_t>(minus_d)] -= 1;
    return out;
}

void normalize_integral(BracketCoefficients& bc) {
    Integer den_lcm(1);
    for (const auto& [t, c] : bc.coeffs) den_lcm = lcm(den_lcm, c.denominator());
    Integer content(0);
    for (auto& [t, c] : bc.coeffs) {
        c *= Rational(den_lcm);
        content = gcd(content, c.numerator());
    }
    if (content == 0) content = 1;
    // Sign convention: the top coefficient C(0,...,0,v) stays positive.
    const IndexTuple top = bc.coeffs.begin()->first;
    if (bc.at(top).sign() < 0) content = -content;
    for (auto& [t, c] : bc.coeffs) c /= Rational(content);
}

}  // namespace

BracketCoefficients solve_coefficients(int n, int v, int k1, int k2, Normalization norm) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    if (v < 0) throw std::invalid_argument("degree must be >= 0");
    if (k1 < n) throw std::invalid_argument("weight below matrix size");

    BracketCoefficients bc;
    bc.n = n;
    bc.v = v;
    bc.k1 = k1;
    bc.k2 = k2;
    bc.normalization = norm;

    const auto tuples = index_tuples(n, v);
    // tuples[0] is (0,...,0,v): the normalized seed; everything after it
    // references only lexicographically smaller tuples, already solved.
    bc.coeffs.emplace(tuples.front(), Rational(1));

    for (std::size_t idx = 1; idx < tuples.size(); ++idx) {
        const std::vector<int>& a = tuples[idx].alpha;
        int m = 0;
        while (a[static_cast<std::size_t>(m)] == 0) ++m;
        const int am = a[static_cast<std::size_t>(m)];

        // Relation, solved for C(alpha):
        //   0 = C(alpha)*am*(k1+1-n+m)                                   (t1)
        //     + C(alpha-1_m+1_{m+1})*(alpha-1_m+1_{m+1})_{m+1}*(k2-m)    (t2)
        //     + C(alpha)*am*(am-1)                                       (t3)
        //     + sum_{m<l<=l'<=n, l+l'-m-1<=n} C(at)*at_l*(at_l'-d)*(2-d) (t4)
        //     - sum_{m<l<=l'<=n, l+l'-m  <=n} C(as)*as_l*(as_l'-d)*(2-d) (t5)
        // with at = alpha-1_m+1_l+1_l'-1_{l+l'-m-1}, as = alpha-1_m+1_l+1_l'-1_{l+l'-m},
        // d = delta_{l,l'}, and C(beta)=0 when any component is negative.
        const Rational pivot = Rational(am) * Rational(k1 + 1 - n + m) +
                               Rational(am) * Rational(am - 1);
        if (pivot.is_zero()) throw std::invalid_argument("weight below matrix size");

        std::vector<int> step = a;
        step[static_cast<std::size_t>(m)] -= 1;
        step[static_cast<std::size_t>(m) + 1] += 1;
        Rational rest = coeff_or_zero(bc.coeffs, step) *
                        Rational(step[static_cast<std::size_t>(m) + 1]) * Rational(k2 - m);

        for (int l = m + 1; l <= n; ++l) {
            for (int lp = l; lp <= n; ++lp) {
                const int delta = (l == lp) ? 1 : 0;
                if (l + lp - m - 1 <= n) {
                    const std::vector<int> at = shifted(a, m, l, lp, l + lp - m - 1);
                    const Rational mult = Rational(at[static_cast<std::size_t>(l)]) *
                                          Rational(at[static_cast<std::size_t>(lp)] - delta) *
                                          Rational(2 - delta);
                    if (!mult.is_zero()) rest += coeff_or_zero(bc.coeffs, at) * mult;
                }
                if (l + lp - m <= n) {
                    const std::vector<int> as = shifted(a, m, l, lp, l + lp - m);
                    const Rational mult = Rational(as[static_cast<std::size_t>(l)]) *
                                          Rational(as[static_cast<std::size_t>(lp)] - delta) *
                                          Rational(2 - delta);
                    if (!mult.is_zero()) rest -= coeff_or_zero(bc.coeffs, as) * mult;
                }
            }
        }

        bc.coeffs.emplace(tuples[idx], -rest / pivot);
    }

    if (norm == Normalization::integral) normalize_integral(bc);
    return bc;
}

MultiPoly assemble_bracket(const BracketCoefficients& bc, const QGeneratorSet& gens) {
    if (gens.n != bc.n) throw std::invalid_argument("generator set size differs from bracket size");
    MultiPoly out;
    for (const auto& [tuple, value] : bc.coeffs) {
        MultiPoly product = MultiPoly::constant(value);
        for (int j = 0; j <= bc.n; ++j) {
            const int e = tuple.alpha[static_cast<std::size_t>(j)];
            if (e > 0) product *= gens.q(j).pow(static_cast<unsigned>(e));
        }
        out += product;
    }
    return out;
}

std::map<std::pair<int, int>, Rational> classical_rc_coefficients(int k1, int k2, int v) {
    std::map<std::pair<int, int>, Rational> out;
    const Rational top = binomial(k1 + v - 1, v);  // raw (0,v) entry
    for (int r = 0; r <= v; ++r) {
        const int s = v - r;
        Rational value = binomial(k1 + v - 1, s) * binomial(k2 + v - 1, r);
        if (r % 2 == 1) value = -value;
        out.emplace(std::make_pair(r, s), value / top);
    }
    return out;
}

}  // namespace hermrc
