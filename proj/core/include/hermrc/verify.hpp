#pragma once

#include "hermrc/generators.hpp"
#include "hermrc/multipoly.hpp"
#include "hermrc/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hermrc {

/// Outcome of one oracle check; on failure the witness carries enough data
/// (parameters, seed, offending trial) to re-run the counterexample.
struct VerificationReport {
    std::string check;
    int n = 0;
    int v = 0;
    int k1 = 0;
    int k2 = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::string witness;

    nlohmann::json to_json() const;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Deterministic small-height rational sampler: |numerator| <= 20,
/// 1 <= denominator <= 5. Same seed, same stream, on every platform.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed) : eng_(seed) {}

    Rational next();
    Rational next_nonzero();
    RationalMatrix matrix(int rows, int cols);
    RationalMatrix invertible_matrix(int n);

private:
    std::mt19937_64 eng_;
};

Rational det_rational(const RationalMatrix& m);
RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);

/// Exact rank over Q: rows are cleared to integers, then fraction-free
/// (Bareiss) elimination.
int exact_rank(RationalMatrix m);

/// Substitutes W = X1 tY1, Z = X2 tY2 (widths k1, k2) and applies every
/// Delta_{s,t}; passes iff all n^2 results are the zero polynomial.
/// Requires k1, k2 >= n (association precondition).
VerificationReport check_pluriharmonic(const MultiPoly& q, int n, int k1, int k2);

/// Randomized exact check of Q(A W tB, A Z tB) = det(A)^v det(B)^v Q(W,Z).
VerificationReport check_homogeneity(const MultiPoly& q, int n, int v, int trials,
                                     std::uint64_t seed);

/// The same identity checked with fully symbolic A, B (entries borrowed from
/// the X and Y families). Expression swell limits this to small n.
VerificationReport check_homogeneity_symbolic(const MultiPoly& q, int n, int v);

/// Evaluation-rank certificate that the binom(n+v, v) degree-v products of
/// Q_0..Q_n are linearly independent, matching the dimension formula.
VerificationReport dimension_basis(int n, int v, std::uint64_t seed);

/// Evaluation-rank certificate that the n sums sum_i Q_a^{[i;i]}, a=0..n-1,
/// are linearly independent over Q.
VerificationReport check_minor_sums_independent(int n, std::uint64_t seed);

/// Builds the full linear system {each monomial coefficient of
/// laplace_total(sum C(alpha) Q^alpha) = 0} and passes iff its kernel is
/// exactly one-dimensional.
VerificationReport check_unique_up_to_scaling(int n, int v, int k1, int k2);

}  // namespace hermrc
