#include "hermrc/verify.hpp"

#include "hermrc/operators.hpp"
#include "hermrc/solver.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hermrc {

nlohmann::json VerificationReport::to_json() const {
    return {{"check", check}, {"n", n},       {"v", v},
            {"k1", k1},       {"k2", k2},     {"seed", seed},
            {"status", pass ? "pass" : "fail"}, {"witness", witness}};
}

Rational RationalSampler::next() {
    const long num = static_cast<long>(eng_() % 41) - 20;
    const long den = static_cast<long>(eng_() % 5) + 1;
    return Rational(num, den);
}

Rational RationalSampler::next_nonzero() {
    for (;;) {
        Rational r = next();
        if (!r.is_zero()) return r;
    }
}

RationalMatrix RationalSampler::matrix(int rows, int cols) {
    RationalMatrix m(static_cast<std::size_t>(rows),
                     std::vector<Rational>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
        for (auto& entry : row) entry = next();
    return m;
}

RationalMatrix RationalSampler::invertible_matrix(int n) {
    for (;;) {
        RationalMatrix m = matrix(n, n);
        if (!det_rational(m).is_zero()) return m;
    }
}

Rational det_rational(const RationalMatrix& m) {
    // Gaussian elimination; entries are exact so no pivot tolerance exists.
    RationalMatrix a = m;
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = a[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
    RationalMatrix out(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

RationalMatrix transpose(const RationalMatrix& m) {
    if (m.empty()) return {};
    RationalMatrix out(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) out[j][i] = m[i][j];
    return out;
}

int exact_rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    // Clear denominators row by row, then run Bareiss on the integer matrix.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer den(1);
        for (const auto& x : m[i]) den = lcm(den, x.denominator());
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational scaled = m[i][j] * Rational(den);
            a[i][j] = scaled.numerator();
        }
    }

    int rank = 0;
    Integer prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                Integer t = a[row][col] * a[r][c] - a[r][col] * a[row][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][c] = t;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

std::map<VarId, Rational> wz_point(const RationalMatrix& w, const RationalMatrix& z) {
    std::map<VarId, Rational> point;
    const int n = static_cast<int>(w.size());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            point.emplace(var_w(i, j), w[i - 1][j - 1]);
            point.emplace(var_z(i, j), z[i - 1][j - 1]);
        }
    return point;
}

std::string matrix_text(const RationalMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ";" : "") << '[';
        for (std::size_t j = 0; j < m[i].size(); ++j)
            os << (j ? "," : "") << m[i][j].to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace

VerificationReport check_pluriharmonic(const MultiPoly& q, int n, int k1, int k2) {
    if (k1 < n || k2 < n)
        throw std::invalid_argument("association requires k1, k2 >= n");
    VerificationReport rep;
    rep.check = "pluriharmonic";
    rep.n = n;
    rep.k1 = k1;
    rep.k2 = k2;
    rep.pass = true;

    const MultiPoly p = associated_polynomial(q, n, k1, k2);
    for (int s = 1; s <= n && rep.pass; ++s) {
        for (int t = 1; t <= n && rep.pass; ++t) {
            const MultiPoly d = delta_st(p, s, t, k1 + k2);
            if (!d.is_zero()) {
                rep.pass = false;
                std::ostringstream os;
                os << "Delta_{" << s << "," << t << "} P = " << d.to_text();
                rep.witness = os.str();
            }
        }
    }
    return rep;
}

VerificationReport check_homogeneity(const MultiPoly& q, int n, int v, int trials,
                                     std::uint64_t seed) {
    VerificationReport rep;
    rep.check = "homogeneity";
    rep.n = n;
    rep.v = v;
    rep.seed = seed;
    rep.pass = true;

    RationalSampler sampler(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const RationalMatrix a = sampler.invertible_matrix(n);
        const RationalMatrix b = sampler.invertible_matrix(n);
        const RationalMatrix w0 = sampler.matrix(n, n);
        const RationalMatrix z0 = sampler.matrix(n, n);

        const RationalMatrix tb = transpose(b);
        const RationalMatrix lhs_w = matmul(matmul(a, w0), tb);
        const RationalMatrix lhs_z = matmul(matmul(a, z0), tb);

        const Rational lhs = q.evaluate_rational(wz_point(lhs_w, lhs_z));
        const Rational scale =
            det_rational(a).pow(static_cast<unsigned>(v)) *
            det_rational(b).pow(static_cast<unsigned>(v));
        const Rational rhs = scale * q.evaluate_rational(wz_point(w0, z0));
        if (lhs != rhs) {
            rep.pass = false;
            std::ostringstream os;
            os << "trial " << trial << ": A=" << matrix_text(a) << " B=" << matrix_text(b)
               << " W0=" << matrix_text(w0) << " Z0=" << matrix_text(z0)
               << " lhs=" << lhs.to_string() << " rhs=" << rhs.to_string();
            rep.witness = os.str();
            break;
        }
    }
    return rep;
}

VerificationReport check_homogeneity_symbolic(const MultiPoly& q, int n, int v) {
    VerificationReport rep;
    rep.check = "homogeneity_symbolic";
    rep.n = n;
    rep.v = v;
    rep.pass = true;

    // Generic A sits in the X family, generic B in the Y family:
    // w_{ij} -> sum_{s,t} x_{is} w_{st} y_{jt}, likewise for z.
    std::map<VarId, MultiPoly> sub;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            MultiPoly w_acc, z_acc;
            for (int s = 1; s <= n; ++s)
                for (int t = 1; t <= n; ++t) {
                    const MultiPoly ab =
                        MultiPoly::variable(var_x(i, s)) * MultiPoly::variable(var_y(j, t));
                    w_acc += ab * MultiPoly::variable(var_w(s, t));
                    z_acc += ab * MultiPoly::variable(var_z(s, t));
                }
            sub.emplace(var_w(i, j), std::move(w_acc));
            sub.emplace(var_z(i, j), std::move(z_acc));
        }
    }

    std::vector<std::vector<MultiPoly>> a_mat(static_cast<std::size_t>(n)),
        b_mat(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            a_mat[static_cast<std::size_t>(i - 1)].push_back(MultiPoly::variable(var_x(i, j)));
            b_mat[static_cast<std::size_t>(i - 1)].push_back(MultiPoly::variable(var_y(i, j)));
        }
    const MultiPoly lhs = q.substitute(sub);
    const MultiPoly rhs = det_poly(a_mat).pow(static_cast<unsigned>(v)) *
                          det_poly(b_mat).pow(static_cast<unsigned>(v)) * q;
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.witness = "Q(A W tB, A Z tB) != det(A)^v det(B)^v Q(W,Z) symbolically";
    }
    return rep;
}

namespace {

// Values of all degree-v generator products at one point, computed through
// the evaluation homomorphism: evaluate each Q_j once, then multiply powers.
std::vector<Rational> product_values(const QGeneratorSet& gens,
                                     const std::vector<IndexTuple>& tuples,
                                     const std::map<VarId, Rational>& point) {
    std::vector<Rational> gen_values;
    for (const auto& g : gens.polys) gen_values.push_back(g.evaluate_rational(point));
    std::vector<Rational> out;
    out.reserve(tuples.size());
    for (const auto& t : tuples) {
        Rational prod(1);
        for (std::size_t j = 0; j < t.alpha.size(); ++j)
            prod *= gen_values[j].pow(static_cast<unsigned>(t.alpha[j]));
        out.push_back(std::move(prod));
    }
    return out;
}

}  // namespace

VerificationReport dimension_basis(int n, int v, std::uint64_t seed) {
    VerificationReport rep;
    rep.check = "dimension_basis";
    rep.n = n;
    rep.v = v;
    rep.seed = seed;

    const QGeneratorSet gens = q_generators(n);
    const auto tuples = index_tuples(n, v);
    const int count = static_cast<int>(tuples.size());
    const int points = count + 2;

    RationalSampler sampler(seed);
    RationalMatrix eval_matrix;
    eval_matrix.reserve(static_cast<std::size_t>(points));
    for (int p = 0; p < points; ++p) {
        const auto point = wz_point(sampler.matrix(n, n), sampler.matrix(n, n));
        eval_matrix.push_back(product_values(gens, tuples, point));
    }

    const int rank = exact_rank(std::move(eval_matrix));
    const Rational expected = binomial(n + v, v);
    rep.pass = (rank == count) && (Rational(count) == expected);
    if (!rep.pass) {
        std::ostringstream os;
        os << "products=" << count << " rank=" << rank << " expected=" << expected.to_string();
        rep.witness = os.str();
    }
    return rep;
}

VerificationReport check_minor_sums_independent(int n, std::uint64_t seed) {
    VerificationReport rep;
    rep.check = "minor_sums_independent";
    rep.n = n;
    rep.seed = seed;

    std::vector<MultiPoly> sums;
    for (int a = 0; a < n; ++a) {
        MultiPoly s;
        for (int i = 1; i <= n; ++i) s += q_minor_principal(n, a, i);
        sums.push_back(std::move(s));
    }

    RationalSampler sampler(seed);
    const int points = n + 2;
    RationalMatrix eval_matrix;
    for (int p = 0; p < points; ++p) {
        const auto point = wz_point(sampler.matrix(n, n), sampler.matrix(n, n));
        std::vector<Rational> row;
        for (const auto& s : sums) row.push_back(s.evaluate_rational(point));
        eval_matrix.push_back(std::move(row));
    }

    const int rank = exact_rank(std::move(eval_matrix));
    rep.pass = (rank == n);
    if (!rep.pass) {
        std::ostringstream os;
        os << "rank=" << rank << " expected=" << n;
        rep.witness = os.str();
    }
    return rep;
}

VerificationReport check_unique_up_to_scaling(int n, int v, int k1, int k2) {
    VerificationReport rep;
    rep.check = "unique_up_to_scaling";
    rep.n = n;
    rep.v = v;
    rep.k1 = k1;
    rep.k2 = k2;

    const QGeneratorSet gens = q_generators(n);
    const auto tuples = index_tuples(n, v);
    const OperatorContext ctx{n, k1, k2};

    // Column alpha holds laplace_total(Q^alpha); rows are monomials.
    std::vector<MultiPoly> images;
    std::set<Monomial> monomials;
    for (const auto& t : tuples) {
        MultiPoly product = MultiPoly::constant(Rational(1));
        for (int j = 0; j <= n; ++j) {
            const int e = t.alpha[static_cast<std::size_t>(j)];
            if (e > 0) product *= gens.q(j).pow(static_cast<unsigned>(e));
        }
        MultiPoly image = laplace_total(product, ctx);
        for (const auto& [m, c] : image.terms()) monomials.insert(m);
        images.push_back(std::move(image));
    }

    RationalMatrix system;
    for (const auto& m : monomials) {
        std::vector<Rational> row;
        row.reserve(images.size());
        for (const auto& img : images) row.push_back(img.coefficient(m));
        system.push_back(std::move(row));
    }

    const int rank = exact_rank(std::move(system));
    const int kernel_dim = static_cast<int>(tuples.size()) - rank;
    rep.pass = (kernel_dim == 1);
    if (!rep.pass) {
        std::ostringstream os;
        os << "kernel dimension " << kernel_dim << ", expected 1";
        rep.witness = os.str();
    }
    return rep;
}

}  // namespace hermrc
