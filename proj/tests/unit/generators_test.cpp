#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermrc/generators.hpp"
#include "hermrc/operators.hpp"
#include "hermrc/verify.hpp"
#include "test_support.hpp"

using namespace hermrc;

namespace {

MultiPoly wv(int r, int c) { return MultiPoly::variable(var_w(r, c)); }
MultiPoly zv(int r, int c) { return MultiPoly::variable(var_z(r, c)); }

std::vector<std::vector<MultiPoly>> family_matrix(int n, VarFamily fam) {
    std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)].push_back(MultiPoly::variable(VarId{fam, i, j}));
    return m;
}

}  // namespace

TEST_CASE("determinants of small symbolic matrices") {
    CHECK(det_poly({{wv(1, 1)}}) == wv(1, 1));
    CHECK(det_poly({{wv(1, 1), wv(1, 2)}, {wv(2, 1), wv(2, 2)}}) ==
          wv(1, 1) * wv(2, 2) - wv(1, 2) * wv(2, 1));
    // repeated row: alternating, so zero
    CHECK(det_poly({{wv(1, 1), wv(1, 2)}, {wv(1, 1), wv(1, 2)}}).is_zero());
    CHECK_THROWS_AS(det_poly({{wv(1, 1), wv(1, 2)}}), std::invalid_argument);
}

TEST_CASE("generators for n=1 and n=2") {
    const QGeneratorSet g1 = q_generators(1);
    CHECK(g1.q(0) == wv(1, 1));
    CHECK(g1.q(1) == zv(1, 1));

    const QGeneratorSet g2 = q_generators(2);
    const MultiPoly expected_q1 =
        wv(1, 1) * zv(2, 2) + zv(1, 1) * wv(2, 2) - wv(1, 2) * zv(2, 1) - zv(1, 2) * wv(2, 1);
    CHECK(g2.q(1) == expected_q1);

    CHECK_THROWS_AS(q_generators(0), std::invalid_argument);
    CHECK_THROWS_AS(g2.q(3), std::out_of_range);
    CHECK(g2.q_or_zero(3).is_zero());
    CHECK(g2.q_or_zero(-1).is_zero());
}

TEST_CASE("Q_0 = det(W) and Q_n = det(Z)") {
    for (int n = 1; n <= 4; ++n) {
        const QGeneratorSet gens = q_generators(n);
        CHECK(gens.q(0) == det_poly(family_matrix(n, VarFamily::W)));
        CHECK(gens.q(n) == det_poly(family_matrix(n, VarFamily::Z)));
    }
}

TEST_CASE("bidegree: Q_a has n-a W-variables and a Z-variables per monomial") {
    for (int n = 1; n <= 3; ++n) {
        const QGeneratorSet gens = q_generators(n);
        for (int a = 0; a <= n; ++a) {
            for (const auto& [m, c] : gens.q(a).terms()) {
                CHECK(m.degree_in(VarFamily::W) == n - a);
                CHECK(m.degree_in(VarFamily::Z) == a);
            }
        }
    }
}

TEST_CASE("symmetry Q_a(W,Z) = Q_{n-a}(Z,W)") {
    for (int n = 1; n <= 3; ++n) {
        const QGeneratorSet gens = q_generators(n);
        std::map<VarId, MultiPoly> swap;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                swap.emplace(var_w(i, j), zv(i, j));
                swap.emplace(var_z(i, j), wv(i, j));
            }
        for (int a = 0; a <= n; ++a) CHECK(gens.q(a).substitute(swap) == gens.q(n - a));
    }
}

TEST_CASE("evaluation identity det(W0 + t Z0) = sum_a Q_a(W0,Z0) t^a, randomized") {
    RationalSampler sampler(101);
    for (int n = 1; n <= 3; ++n) {
        const QGeneratorSet gens = q_generators(n);
        for (int trial = 0; trial < 10; ++trial) {
            const RationalMatrix w0 = sampler.matrix(n, n);
            const RationalMatrix z0 = sampler.matrix(n, n);
            const Rational t = sampler.next();

            RationalMatrix sum = w0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    sum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                        t * z0[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];

            std::map<VarId, Rational> point;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    point.emplace(var_w(i, j), w0[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
                    point.emplace(var_z(i, j), z0[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
                }

            Rational rhs(0);
            Rational power(1);
            for (int a = 0; a <= n; ++a) {
                rhs += gens.q(a).evaluate_rational(point) * power;
                power *= t;
            }
            CHECK(det_rational(sum) == rhs);
        }
    }
}

TEST_CASE("minors") {
    // n=2, a=0, delete row 2 / col 2: the 1x1 corner w11
    CHECK(q_minor(2, 0, MinorSpec{{2}, {2}}) == wv(1, 1));
    // out of range: a > n - l
    CHECK(q_minor(2, 2, MinorSpec{{1}, {1}}).is_zero());
    CHECK(q_minor(2, -1, MinorSpec{{1}, {1}}).is_zero());
    // n=3, delete row 3 / col 3: matches the 2x2 generator on shared variable names
    CHECK(q_minor(3, 1, MinorSpec{{3}, {3}}) == q_generators(2).q(1));
    // deleting everything leaves the empty determinant 1
    CHECK(q_minor(1, 0, MinorSpec{{1}, {1}}) == MultiPoly::constant(Rational(1)));
    CHECK(q_minor_principal(2, 1, 1) == zv(2, 2));
}

TEST_CASE("malformed minor specs are rejected") {
    CHECK_THROWS_AS(q_minor(2, 0, MinorSpec{{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(q_minor(2, 0, MinorSpec{{0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(q_minor(2, 0, MinorSpec{{3}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(q_minor(3, 0, MinorSpec{{2, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(q_minor(3, 0, MinorSpec{{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("substituted form: Q_a(X1 tY1, X2 tY2) is the t^a coefficient of det") {
    // Independent route: interpolate det(X1 tY1 + t * X2 tY2) from n+1 integer
    // values of t, then compare against the associated polynomial of Q_a.
    for (int n = 1; n <= 2; ++n) {
        const int k1 = n, k2 = n;
        const QGeneratorSet gens = q_generators(n);
        const auto assoc = association_map(n, k1, k2);

        auto gram = [&](bool second) {
            std::vector<std::vector<MultiPoly>> m(static_cast<std::size_t>(n));
            const int lo = second ? k1 + 1 : 1;
            const int hi = second ? k1 + k2 : k1;
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    MultiPoly e;
                    for (int u = lo; u <= hi; ++u)
                        e += MultiPoly::variable(var_x(i, u)) * MultiPoly::variable(var_y(j, u));
                    m[static_cast<std::size_t>(i - 1)].push_back(std::move(e));
                }
            return m;
        };
        const auto a_mat = gram(false);
        const auto b_mat = gram(true);

        // dets[j] = det(A + j*B) for j = 0..n
        std::vector<MultiPoly> dets;
        for (int j = 0; j <= n; ++j) {
            std::vector<std::vector<MultiPoly>> m = a_mat;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    m[static_cast<std::size_t>(r)] [static_cast<std::size_t>(c)] +=
                        b_mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].scaled(Rational(j));
            dets.push_back(det_poly(m));
        }

        // Lagrange interpolation in the formal parameter: coefficient a of the
        // degree-n polynomial through (j, dets[j]).
        for (int a = 0; a <= n; ++a) {
            MultiPoly coeff;
            for (int j = 0; j <= n; ++j) {
                // ell_j(t) = prod_{i != j} (t - i)/(j - i); take its t^a coefficient.
                std::vector<Rational> ell{Rational(1)};  // polynomial in t, ascending
                Rational denom(1);
                for (int i = 0; i <= n; ++i) {
                    if (i == j) continue;
                    std::vector<Rational> next(ell.size() + 1, Rational(0));
                    for (std::size_t deg = 0; deg < ell.size(); ++deg) {
                        next[deg] += ell[deg] * Rational(-i);
                        next[deg + 1] += ell[deg];
                    }
                    ell = std::move(next);
                    denom *= Rational(j - i);
                }
                coeff += dets[static_cast<std::size_t>(j)].scaled(ell[static_cast<std::size_t>(a)] / denom);
            }
            CHECK(coeff == gens.q(a).substitute(assoc));
        }
    }
}
