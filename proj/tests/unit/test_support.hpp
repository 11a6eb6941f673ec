#pragma once

#include "hermrc/multipoly.hpp"
#include "hermrc/verify.hpp"

#include <cstdint>
#include <vector>

namespace hermrc::testing {

/// Random polynomial in the w/z entries of n x n matrices: `terms` monomials
/// of degree <= max_degree with small rational coefficients.
inline MultiPoly random_wz_poly(RationalSampler& sampler, int n, int terms, int max_degree,
                                std::uint64_t extra_seed) {
    std::mt19937_64 eng(extra_seed);
    auto pick = [&](std::uint64_t bound) { return static_cast<int>(eng() % bound); };
    MultiPoly out;
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Factor> factors;
        const int degree = 1 + pick(static_cast<std::uint64_t>(max_degree));
        for (int i = 0; i < degree; ++i) {
            const VarFamily fam = (pick(2) == 0) ? VarFamily::W : VarFamily::Z;
            factors.emplace_back(VarId{fam, 1 + pick(static_cast<std::uint64_t>(n)),
                                       1 + pick(static_cast<std::uint64_t>(n))},
                                 1);
        }
        out += MultiPoly::term(Monomial::from_factors(std::move(factors)), sampler.next_nonzero());
    }
    return out;
}

inline std::map<VarId, Rational> random_wz_point(RationalSampler& sampler, int n) {
    std::map<VarId, Rational> point;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            point.emplace(var_w(i, j), sampler.next());
            point.emplace(var_z(i, j), sampler.next());
        }
    return point;
}

}  // namespace hermrc::testing
