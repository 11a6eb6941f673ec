#include "hermrc/operators.hpp"

#include <stdexcept>

namespace hermrc {

void OperatorContext::validate() const {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    if (k1 < 1 || k2 < 1) throw std::invalid_argument("weights must be >= 1");
}

MultiPoly delta_st(const MultiPoly& p, int s, int t, int k) {
    MultiPoly out;
    for (int u = 1; u <= k; ++u) out += p.derivative(var_x(s, u)).derivative(var_y(t, u));
    return out;
}

MultiPoly l_op(const MultiPoly& q, int i, int j, const OperatorContext& ctx, VarFamily family) {
    ctx.validate();
    if (family != VarFamily::W && family != VarFamily::Z)
        throw std::invalid_argument("operator family must be W or Z");
    const bool w = (family == VarFamily::W);
    auto var = [&](int r, int c) { return w ? var_w(r, c) : var_z(r, c); };
    const Rational weight(w ? ctx.k1 : ctx.k2);

    MultiPoly out = q.derivative(var(i, j)).scaled(weight);
    for (int s = 1; s <= ctx.n; ++s) {
        for (int t = 1; t <= ctx.n; ++t) {
            MultiPoly second = q.derivative(var(s, j)).derivative(var(i, t));
            if (second.is_zero()) continue;
            out += MultiPoly::variable(var(s, t)) * second;
        }
    }
    return out;
}

MultiPoly pairing(const MultiPoly& qa, const MultiPoly& qb, int i, VarFamily family, int n) {
    if (family != VarFamily::W && family != VarFamily::Z)
        throw std::invalid_argument("pairing family must be W or Z");
    const bool w = (family == VarFamily::W);
    auto var = [&](int r, int c) { return w ? var_w(r, c) : var_z(r, c); };

    MultiPoly out;
    for (int s = 1; s <= n; ++s) {
        for (int t = 1; t <= n; ++t) {
            MultiPoly cross = qa.derivative(var(s, i)) * qb.derivative(var(i, t)) +
                              qa.derivative(var(i, t)) * qb.derivative(var(s, i));
            if (cross.is_zero()) continue;
            out += MultiPoly::variable(var(s, t)) * cross;
        }
    }
    return out;
}

MultiPoly laplace_total(const MultiPoly& q, const OperatorContext& ctx) {
    ctx.validate();
    MultiPoly out;
    for (int i = 1; i <= ctx.n; ++i) {
        out += l_op(q, i, i, ctx, VarFamily::W);
        out += l_op(q, i, i, ctx, VarFamily::Z);
    }
    return out;
}

std::map<VarId, MultiPoly> association_map(int n, int k1, int k2) {
    std::map<VarId, MultiPoly> map;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            MultiPoly w_sum, z_sum;
            for (int u = 1; u <= k1; ++u)
                w_sum += MultiPoly::variable(var_x(i, u)) * MultiPoly::variable(var_y(j, u));
            for (int u = k1 + 1; u <= k1 + k2; ++u)
                z_sum += MultiPoly::variable(var_x(i, u)) * MultiPoly::variable(var_y(j, u));
            map.emplace(var_w(i, j), std::move(w_sum));
            map.emplace(var_z(i, j), std::move(z_sum));
        }
    }
    return map;
}

MultiPoly associated_polynomial(const MultiPoly& q, int n, int k1, int k2) {
    return q.substitute(association_map(n, k1, k2));
}

}  // namespace hermrc
