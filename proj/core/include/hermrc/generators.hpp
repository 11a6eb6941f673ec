#pragma once

#include "hermrc/multipoly.hpp"

#include <vector>

namespace hermrc {

/// Rows/columns to delete from an n x n matrix. Both lists must be strictly
/// increasing, of equal length, with 1-based indices in range.
struct MinorSpec {
    std::vector<int> rows_removed;
    std::vector<int> cols_removed;

    void validate(int n) const;
};

/// The generator polynomials Q_0,...,Q_n defined by
/// det(W + lambda*Z) = sum_a Q_a(W,Z) * lambda^a.
struct QGeneratorSet {
    int n = 0;
    std::vector<MultiPoly> polys;  // size n+1, index a

    const MultiPoly& q(int a) const;
    /// Q_a with the out-of-range convention Q_a = 0 for a < 0 or a > n.
    MultiPoly q_or_zero(int a) const;
};

/// Exact symbolic determinant of a square matrix of polynomials.
MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& m);

QGeneratorSet q_generators(int n);

/// Coefficient of lambda^a in det of (W + lambda*Z) with the given rows and
/// columns deleted; zero when a < 0 or a > n - l (l = number of deletions).
MultiPoly q_minor(int n, int a, const MinorSpec& spec);

/// Principal single-deletion minor Q_a^{[i;i]}.
MultiPoly q_minor_principal(int n, int a, int i);

/// Single-deletion minor Q_a^{[r;c]} (delete row r, column c).
MultiPoly q_minor_rc(int n, int a, int r, int c);

}  // namespace hermrc
