#pragma once

#include "hermrc/multipoly.hpp"

#include <map>

namespace hermrc {

/// Sizes and weights shared by the differential operators.
struct OperatorContext {
    int n;
    int k1;
    int k2;

    int k() const { return k1 + k2; }
    void validate() const;
};

/// Mixed Laplacian sum_{u=1..k} d^2/(dx_{s,u} dy_{t,u}) applied to an
/// (X,Y)-polynomial.
MultiPoly delta_st(const MultiPoly& p, int s, int t, int k);

/// L^{(k1)}_{i,j} = k1*d/dw_{i,j} + sum_{s,t} w_{s,t} d^2/(dw_{s,j} dw_{i,t})
/// for family W; the primed analogue with k2 and z-variables for family Z.
MultiPoly l_op(const MultiPoly& q, int i, int j, const OperatorContext& ctx, VarFamily family);

/// Bilinear pairing (Q,Q')_{i,W} or (Q,Q')_{i,Z}:
/// sum_{s,t} v_{s,t} (d_{v_{s,i}}Q * d_{v_{i,t}}Q' + d_{v_{i,t}}Q * d_{v_{s,i}}Q').
MultiPoly pairing(const MultiPoly& qa, const MultiPoly& qb, int i, VarFamily family, int n);

/// sum_i (L^{(k1)}_{i,i} + L'^{(k2)}_{i,i}) applied to a (W,Z)-polynomial;
/// this is the Laplacian seen through the association W = X1 tY1, Z = X2 tY2.
MultiPoly laplace_total(const MultiPoly& q, const OperatorContext& ctx);

/// Substitution map realizing the association: w_{i,j} -> sum_{u<=k1} x_{i,u} y_{j,u},
/// z_{i,j} -> sum_{k1<u<=k1+k2} x_{i,u} y_{j,u}.
std::map<VarId, MultiPoly> association_map(int n, int k1, int k2);

/// The (X,Y)-polynomial P associated to Q: P(X,Y) = Q(X1 tY1, X2 tY2).
MultiPoly associated_polynomial(const MultiPoly& q, int n, int k1, int k2);

}  // namespace hermrc
