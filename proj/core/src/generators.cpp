#include "hermrc/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace hermrc {

namespace {

// Polynomial in a formal parameter lambda with MultiPoly coefficients;
// lambda never becomes a stored variable.
struct LambdaPoly {
    std::vector<MultiPoly> c;  // c[a] multiplies lambda^a

    static LambdaPoly zero() { return {}; }
    static LambdaPoly one() { return {{MultiPoly::constant(Rational(1))}}; }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly out;
        out.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < out.c.size(); ++i) {
            if (i < a.c.size()) out.c[i] += a.c[i];
            if (i < b.c.size()) out.c[i] += b.c[i];
        }
        out.trim();
        return out;
    }

    friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly out;
        out.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < out.c.size(); ++i) {
            if (i < a.c.size()) out.c[i] += a.c[i];
            if (i < b.c.size()) out.c[i] -= b.c[i];
        }
        out.trim();
        return out;
    }

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.c == b.c; }

    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly out;
        if (a.c.empty() || b.c.empty()) return out;
        out.c.resize(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
        out.trim();
        return out;
    }
};

// Laplace expansion along successive rows, memoized on the set of columns
// still available. Entries are polynomials, so this beats elimination.
template <class R>
R det_expand(const std::vector<std::vector<R>>& m, const R& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    std::map<std::uint32_t, R> memo;
    const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);

    auto rec = [&](auto&& self, int row, std::uint32_t mask) -> R {
        if (row == n) return one;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        R acc{};
        int sign = 1;  // alternates over the surviving columns only
        for (int col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            if (!(m[row][col] == R{})) {
                R sub = self(self, row + 1, mask & ~(1u << col));
                R contrib = m[row][col] * sub;
                acc = (sign > 0) ? acc + contrib : acc - contrib;
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0, full);
}

// Keeps the indices in `removed` deleted: returns surviving 1-based indices.
std::vector<int> surviving(int n, const std::vector<int>& removed) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(removed.begin(), removed.end(), i)) out.push_back(i);
    return out;
}

LambdaPoly char_matrix_det(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::vector<std::vector<LambdaPoly>> m(rows.size(), std::vector<LambdaPoly>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            m[i][j].c = {MultiPoly::variable(var_w(rows[i], cols[j])),
                         MultiPoly::variable(var_z(rows[i], cols[j]))};
        }
    }
    return det_expand(m, LambdaPoly::one());
}

}  // namespace

void MinorSpec::validate(int n) const {
    if (rows_removed.size() != cols_removed.size())
        throw std::invalid_argument("minor spec: row and column deletion counts differ");
    auto check = [n](const std::vector<int>& idx, const char* what) {
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 1 || idx[i] > n)
                throw std::invalid_argument(std::string("minor spec: ") + what + " index out of range");
            if (i > 0 && idx[i] <= idx[i - 1])
                throw std::invalid_argument(std::string("minor spec: ") + what +
                                            " indices must be strictly increasing");
        }
    };
    check(rows_removed, "row");
    check(cols_removed, "column");
}

const MultiPoly& QGeneratorSet::q(int a) const {
    if (a < 0 || a > n) throw std::out_of_range("generator index outside 0..n");
    return polys[static_cast<std::size_t>(a)];
}

MultiPoly QGeneratorSet::q_or_zero(int a) const {
    if (a < 0 || a > n) return MultiPoly();
    return polys[static_cast<std::size_t>(a)];
}

MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant of non-square matrix");
    return det_expand(m, MultiPoly::constant(Rational(1)));
}

QGeneratorSet q_generators(int n) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    LambdaPoly det = char_matrix_det(all, all);
    QGeneratorSet gens;
    gens.n = n;
    gens.polys.resize(static_cast<std::size_t>(n) + 1);
    for (std::size_t a = 0; a < det.c.size(); ++a) gens.polys[a] = det.c[a];
    return gens;
}

MultiPoly q_minor(int n, int a, const MinorSpec& spec) {
    if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
    spec.validate(n);
    const int l = static_cast<int>(spec.rows_removed.size());
    if (a < 0 || a > n - l) return MultiPoly();
    LambdaPoly det =
        char_matrix_det(surviving(n, spec.rows_removed), surviving(n, spec.cols_removed));
    if (a >= static_cast<int>(det.c.size())) return MultiPoly();
    return det.c[static_cast<std::size_t>(a)];
}

MultiPoly q_minor_principal(int n, int a, int i) { return q_minor(n, a, MinorSpec{{i}, {i}}); }

MultiPoly q_minor_rc(int n, int a, int r, int c) { return q_minor(n, a, MinorSpec{{r}, {c}}); }

}  // namespace hermrc
