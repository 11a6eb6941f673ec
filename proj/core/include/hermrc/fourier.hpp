#pragma once

#include "hermrc/multipoly.hpp"
#include "hermrc/quad_field.hpp"
#include "hermrc/solver.hpp"
#include "hermrc/verify.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <vector>

namespace hermrc {

/// Hermitian n x n matrix over Q(sqrt(-d)) indexing one Fourier coefficient.
/// Construction enforces h = h* (so diagonal entries are real); positive
/// (semi)definiteness is decided exactly.
class HermitianIndex {
public:
    HermitianIndex(int n, long d, std::vector<std::vector<QuadFieldElement>> entries);

    static HermitianIndex zero(int n, long d);
    /// Diagonal rational matrix, convenient for n=1 indices and tests.
    static HermitianIndex diagonal(long d, const std::vector<Rational>& diag);

    int n() const { return n_; }
    long d() const { return d_; }
    const QuadFieldElement& at(int i, int j) const;  // 1-based
    Rational trace() const;

    bool is_zero() const;
    /// Exact: eigenvalues >= 0, via sums of principal minors (the
    /// characteristic-polynomial sign conditions).
    bool is_positive_semidefinite() const;
    /// Exact: Sylvester's criterion on leading principal minors.
    bool is_positive_definite() const;

    friend HermitianIndex operator+(const HermitianIndex& a, const HermitianIndex& b);
    friend bool operator==(const HermitianIndex& a, const HermitianIndex& b);
    friend bool operator<(const HermitianIndex& a, const HermitianIndex& b);

    nlohmann::json to_json() const;
    static HermitianIndex from_json(int n, long d, const nlohmann::json& j);

private:
    int n_;
    long d_;
    std::vector<std::vector<QuadFieldElement>> e_;
};

/// Finitely supported Fourier expansion of a Hermitian modular form: indices
/// are PSD Hermitian matrices, coefficients live in Q(sqrt(-d)). Coefficients
/// are exactly correct for every PSD index of trace <= trace_bound; indices
/// beyond the bound are unknown, not zero.
struct FourierSeries {
    int n = 1;
    long d = 1;
    int weight = 0;
    std::string level;  // opaque label; no structure is attached to it
    Rational trace_bound;
    std::map<HermitianIndex, QuadFieldElement> entries;

    /// Validates and stores one coefficient; non-PSD indices are rejected.
    void set(const HermitianIndex& h, QuadFieldElement c);
    QuadFieldElement coefficient(const HermitianIndex& h) const;

    nlohmann::json to_json() const;
    /// Accepts the full {"entries":[...]} schema and, for n=1, the
    /// {"q_expansion":["c0","c1",...]} shorthand.
    static FourierSeries from_json(const nlohmann::json& j);

    /// Classical n=1 helper: coefficients c(0..len-1) given as rationals.
    static FourierSeries q_expansion(long d, int weight, const std::vector<Rational>& coeffs);
};

/// Q evaluated at (W,Z) = (h1,h2). The value of any GL-invariant bracket at a
/// Hermitian pair is real; that is asserted here.
QuadFieldElement evaluate_Q_at(const MultiPoly& q, const HermitianIndex& h1,
                               const HermitianIndex& h2);

/// The bracket acting on Fourier expansions: the output coefficient at h is
/// sum_{h1+h2=h} c1(h1) c2(h2) Q(h1,h2), of weight k1+k2+2v, with trace
/// bound min of the inputs'. No transcendental normalization factor is
/// applied, so the ring of definition of the coefficients is preserved.
FourierSeries apply_bracket(const FourierSeries& f1, const FourierSeries& f2,
                            const BracketCoefficients& bc);

/// True iff every index carrying a nonzero coefficient is positive definite.
bool is_cusp_supported(const FourierSeries& f);

/// Randomized oracle: PSD pairs (h1,h2) sharing a kernel vector annihilate
/// every degree-v >= 1 bracket exactly.
VerificationReport check_cusp_vanishing(int n, int v, int k1, int k2, int trials,
                                        std::uint64_t seed);

/// Divisibility constraint on v from the unit group of Q(sqrt(-d)):
/// divisor 2 for d=1, 3 for d=3, otherwise 1.
struct WeightCondition {
    long d = 0;
    int v = 0;
    int required_divisor = 1;
    bool satisfied = false;

    nlohmann::json to_json() const;
};

WeightCondition weight_condition(long d, int v);

}  // namespace hermrc
