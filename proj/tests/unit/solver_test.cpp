#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermrc/operators.hpp"
#include "hermrc/solver.hpp"

#include <nlohmann/json.hpp>

using namespace hermrc;

TEST_CASE("index tuples enumerate in increasing lexicographic order") {
    const auto tuples = index_tuples(1, 2);
    REQUIRE(tuples.size() == 3);
    CHECK(tuples[0].alpha == std::vector<int>{0, 2});
    CHECK(tuples[1].alpha == std::vector<int>{1, 1});
    CHECK(tuples[2].alpha == std::vector<int>{2, 0});
    for (std::size_t i = 1; i < tuples.size(); ++i) CHECK(tuples[i - 1] < tuples[i]);

    // count matches the dimension formula binom(n+v, v)
    CHECK(index_tuples(2, 2).size() == 6);
    CHECK(index_tuples(3, 2).size() == 10);
    CHECK(index_tuples(2, 0).size() == 1);
}

TEST_CASE("first weights: n=1, v=1, k1=4, k2=6") {
    const auto bc = solve_coefficients(1, 1, 4, 6, Normalization::unit);
    CHECK(bc.at(IndexTuple{{0, 1}}) == Rational(1));
    CHECK(bc.at(IndexTuple{{1, 0}}) == Rational(-3, 2));
}

TEST_CASE("n=1, v=2, k1=4, k2=6 in both normalizations") {
    const auto unit = solve_coefficients(1, 2, 4, 6, Normalization::unit);
    CHECK(unit.at(IndexTuple{{0, 2}}) == Rational(1));
    CHECK(unit.at(IndexTuple{{1, 1}}) == Rational(-7, 2));
    CHECK(unit.at(IndexTuple{{2, 0}}) == Rational(21, 10));

    const auto integral = solve_coefficients(1, 2, 4, 6, Normalization::integral);
    CHECK(integral.at(IndexTuple{{0, 2}}) == Rational(10));
    CHECK(integral.at(IndexTuple{{1, 1}}) == Rational(-35));
    CHECK(integral.at(IndexTuple{{2, 0}}) == Rational(21));
}

TEST_CASE("normalization and support invariants") {
    for (auto [n, v, k1, k2] : {std::tuple{1, 4, 5, 7}, {2, 2, 2, 5}, {3, 2, 3, 3}}) {
        const auto bc = solve_coefficients(n, v, k1, k2);
        CHECK(bc.coeffs.size() == index_tuples(n, v).size());
        Integer content(0);
        for (const auto& [tuple, value] : bc.coeffs) {
            CHECK(tuple.sum() == v);
            CHECK(value.is_integer());
            content = gcd(content, value.numerator());
        }
        CHECK(content == 1);
        std::vector<int> top(static_cast<std::size_t>(n), 0);
        top.push_back(v);
        CHECK(bc.at(IndexTuple{top}).sign() > 0);

        const auto unit = solve_coefficients(n, v, k1, k2, Normalization::unit);
        CHECK(unit.at(IndexTuple{top}) == Rational(1));
    }
}

TEST_CASE("degenerate degrees") {
    const auto bc = solve_coefficients(2, 0, 3, 3);
    REQUIRE(bc.coeffs.size() == 1);
    CHECK(bc.at(IndexTuple{{0, 0, 0}}) == Rational(1));

    const MultiPoly one = assemble_bracket(bc, q_generators(2));
    CHECK(one == MultiPoly::constant(Rational(1)));
}

TEST_CASE("weight below matrix size is rejected") {
    CHECK_THROWS_WITH_AS(solve_coefficients(2, 1, 1, 5), "weight below matrix size",
                         std::invalid_argument);
    CHECK_THROWS_AS(solve_coefficients(3, 1, 2, 9), std::invalid_argument);
    CHECK_NOTHROW(solve_coefficients(2, 1, 2, 1));  // only k1 is pivot-constrained
}

TEST_CASE("classical coefficients oracle") {
    const auto v1 = classical_rc_coefficients(4, 6, 1);
    CHECK(v1.at({0, 1}) == Rational(1));
    CHECK(v1.at({1, 0}) == Rational(-3, 2));

    const auto v0 = classical_rc_coefficients(4, 6, 0);
    REQUIRE(v0.size() == 1);
    CHECK(v0.at({0, 0}) == Rational(1));

    // equal weights, odd degree: antisymmetric under (r,s) <-> (s,r)
    for (int k : {4, 8}) {
        for (int v : {1, 3, 5}) {
            const auto coeffs = classical_rc_coefficients(k, k, v);
            for (const auto& [rs, value] : coeffs)
                CHECK(value == -coeffs.at({rs.second, rs.first}));
        }
    }
}

TEST_CASE("n=1 recurrence agrees with the classical formula") {
    for (int k1 : {4, 6, 9}) {
        for (int k2 : {4, 7}) {
            for (int v = 1; v <= 8; ++v) {
                const auto bc = solve_coefficients(1, v, k1, k2, Normalization::unit);
                const auto classical = classical_rc_coefficients(k1, k2, v);
                REQUIRE(bc.coeffs.size() == classical.size());
                for (const auto& [rs, value] : classical)
                    CHECK(bc.at(IndexTuple{{rs.first, rs.second}}) == value);
            }
        }
    }
}

TEST_CASE("assembled brackets") {
    const MultiPoly b1 = assemble_bracket(solve_coefficients(1, 1, 4, 6, Normalization::unit),
                                          q_generators(1));
    CHECK(b1 == MultiPoly::variable(var_z(1, 1)) -
                    MultiPoly::variable(var_w(1, 1)).scaled(Rational(3, 2)));

    // size mismatch
    CHECK_THROWS_AS(assemble_bracket(solve_coefficients(1, 1, 4, 6), q_generators(2)),
                    std::invalid_argument);

    // n=2, v=1: solved coefficients put the bracket in the Laplacian kernel
    const auto bc = solve_coefficients(2, 1, 2, 2);
    const MultiPoly b2 = assemble_bracket(bc, q_generators(2));
    CHECK(b2.total_degree() == 2);  // homogeneous of degree n*v
    for (const auto& [m, c] : b2.terms()) CHECK(m.degree() == 2);
    CHECK(laplace_total(b2, OperatorContext{2, 2, 2}).is_zero());
}

TEST_CASE("json serialization is ordered by lex index") {
    const auto bc = solve_coefficients(1, 2, 4, 6);
    const nlohmann::json j = bc.to_json();
    CHECK(j["n"] == 1);
    CHECK(j["normalization"] == "integral");
    REQUIRE(j["coefficients"].size() == 3);
    CHECK(j["coefficients"][0]["alpha"] == nlohmann::json::array({0, 2}));
    CHECK(j["coefficients"][0]["value"] == "10");
    CHECK(j["coefficients"][1]["alpha"] == nlohmann::json::array({1, 1}));
    CHECK(j["coefficients"][2]["alpha"] == nlohmann::json::array({2, 0}));
    CHECK(bc.to_json().dump() == solve_coefficients(1, 2, 4, 6).to_json().dump());
}
