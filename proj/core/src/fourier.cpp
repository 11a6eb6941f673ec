#include "hermrc/fourier.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hermrc {

namespace {

QuadFieldElement json_to_qfe(const nlohmann::json& j, long d) {
    return {Rational::from_string(j.at("re").get<std::string>()),
            Rational::from_string(j.at("co").get<std::string>()), d};
}

nlohmann::json qfe_to_json(const QuadFieldElement& x) {
    return {{"re", x.re().to_string()}, {"co", x.co().to_string()}};
}

using QuadMatrix = std::vector<std::vector<QuadFieldElement>>;

// Determinant over Q(sqrt(-d)) by cofactor expansion; matrices here are tiny.
QuadFieldElement det_quad(const QuadMatrix& m, long d) {
    const std::size_t n = m.size();
    if (n == 0) return QuadFieldElement::one(d);
    if (n == 1) return m[0][0];
    QuadFieldElement acc = QuadFieldElement::zero(d);
    for (std::size_t col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        QuadMatrix sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<QuadFieldElement> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        QuadFieldElement term = m[0][col] * det_quad(sub, d);
        if (col % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

QuadMatrix submatrix(const QuadMatrix& m, const std::vector<int>& idx) {
    QuadMatrix out;
    for (int r : idx) {
        std::vector<QuadFieldElement> row;
        for (int c : idx) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        out.push_back(std::move(row));
    }
    return out;
}

int compare_qfe(const QuadFieldElement& a, const QuadFieldElement& b) {
    if (a.re() != b.re()) return a.re() < b.re() ? -1 : 1;
    if (a.co() != b.co()) return a.co() < b.co() ? -1 : 1;
    return 0;
}

}  // namespace

HermitianIndex::HermitianIndex(int n, long d, std::vector<std::vector<QuadFieldElement>> entries)
    : n_(n), d_(d), e_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("hermitian index size must be >= 1");
    if (static_cast<int>(e_.size()) != n)
        throw std::invalid_argument("hermitian index: wrong number of rows");
    for (const auto& row : e_) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("hermitian index: wrong number of columns");
        for (const auto& x : row)
            if (x.d() != d) throw std::invalid_argument("hermitian index: mixed field parameters");
    }
    for (int i = 0; i < n; ++i) {
        if (!e_[i][i].is_real())
            throw std::invalid_argument("hermitian index: diagonal entries must be real");
        for (int j = 0; j < i; ++j) {
            if (e_[i][j] != e_[j][i].conjugate())
                throw std::invalid_argument("hermitian index: matrix is not conjugate-symmetric");
        }
    }
}

HermitianIndex HermitianIndex::zero(int n, long d) {
    return HermitianIndex(
        n, d,
        QuadMatrix(static_cast<std::size_t>(n),
                   std::vector<QuadFieldElement>(static_cast<std::size_t>(n),
                                                 QuadFieldElement::zero(d))));
}

HermitianIndex HermitianIndex::diagonal(long d, const std::vector<Rational>& diag) {
    const int n = static_cast<int>(diag.size());
    QuadMatrix e(static_cast<std::size_t>(n),
                 std::vector<QuadFieldElement>(static_cast<std::size_t>(n),
                                               QuadFieldElement::zero(d)));
    for (int i = 0; i < n; ++i) e[i][i] = QuadFieldElement::real(diag[static_cast<std::size_t>(i)], d);
    return HermitianIndex(n, d, std::move(e));
}

const QuadFieldElement& HermitianIndex::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("hermitian index entry");
    return e_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Rational HermitianIndex::trace() const {
    Rational t(0);
    for (int i = 0; i < n_; ++i) t += e_[i][i].re();
    return t;
}

bool HermitianIndex::is_zero() const {
    for (const auto& row : e_)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

bool HermitianIndex::is_positive_semidefinite() const {
    // Eigenvalues are real; all are >= 0 iff every elementary symmetric
    // function of them is >= 0, and e_k equals the sum of k x k principal
    // minors. Minors of a Hermitian matrix are real.
    std::vector<Rational> e_sum(static_cast<std::size_t>(n_) + 1, Rational(0));
    const std::uint32_t limit = 1u << n_;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n_; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        const QuadFieldElement det = det_quad(submatrix(e_, idx), d_);
        if (!det.is_real()) throw std::logic_error("principal minor of Hermitian matrix not real");
        e_sum[idx.size()] += det.re();
    }
    for (int k = 1; k <= n_; ++k)
        if (e_sum[static_cast<std::size_t>(k)].sign() < 0) return false;
    return true;
}

bool HermitianIndex::is_positive_definite() const {
    for (int k = 1; k <= n_; ++k) {
        std::vector<int> idx;
        for (int i = 0; i < k; ++i) idx.push_back(i);
        const QuadFieldElement det = det_quad(submatrix(e_, idx), d_);
        if (!det.is_real()) throw std::logic_error("principal minor of Hermitian matrix not real");
        if (det.re().sign() <= 0) return false;
    }
    return true;
}

HermitianIndex operator+(const HermitianIndex& a, const HermitianIndex& b) {
    if (a.n_ != b.n_ || a.d_ != b.d_)
        throw std::invalid_argument("hermitian index addition: size or field mismatch");
    QuadMatrix e = a.e_;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) e[i][j] += b.e_[i][j];
    return HermitianIndex(a.n_, a.d_, std::move(e));
}

bool operator==(const HermitianIndex& a, const HermitianIndex& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.e_ == b.e_;
}

bool operator<(const HermitianIndex& a, const HermitianIndex& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    if (a.d_ != b.d_) return a.d_ < b.d_;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            const int c = compare_qfe(a.e_[i][j], b.e_[i][j]);
            if (c != 0) return c < 0;
        }
    return false;
}

nlohmann::json HermitianIndex::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : e_) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(qfe_to_json(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

HermitianIndex HermitianIndex::from_json(int n, long d, const nlohmann::json& j) {
    QuadMatrix e;
    for (const auto& row : j) {
        std::vector<QuadFieldElement> r;
        for (const auto& x : row) r.push_back(json_to_qfe(x, d));
        e.push_back(std::move(r));
    }
    return HermitianIndex(n, d, std::move(e));
}

void FourierSeries::set(const HermitianIndex& h, QuadFieldElement c) {
    if (h.n() != n || h.d() != d)
        throw std::invalid_argument("fourier index: size or field mismatch with series");
    if (!h.is_positive_semidefinite())
        throw std::invalid_argument("fourier index is not positive semi-definite");
    if (c.is_zero())
        entries.erase(h);
    else
        entries.insert_or_assign(h, std::move(c));
}

QuadFieldElement FourierSeries::coefficient(const HermitianIndex& h) const {
    auto it = entries.find(h);
    return it == entries.end() ? QuadFieldElement::zero(d) : it->second;
}

nlohmann::json FourierSeries::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& [h, c] : entries) list.push_back({{"h", h.to_json()}, {"c", qfe_to_json(c)}});
    nlohmann::json out{{"n", n},
                       {"d", d},
                       {"weight", weight},
                       {"trace_bound", trace_bound.to_string()},
                       {"entries", std::move(list)}};
    if (!level.empty()) out["level"] = level;
    return out;
}

FourierSeries FourierSeries::from_json(const nlohmann::json& j) {
    FourierSeries f;
    f.n = j.at("n").get<int>();
    f.d = j.at("d").get<long>();
    f.weight = j.at("weight").get<int>();
    if (j.contains("level")) f.level = j.at("level").get<std::string>();

    if (j.contains("q_expansion")) {
        if (f.n != 1)
            throw std::invalid_argument("q_expansion shorthand is only valid for n=1");
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("q_expansion"))
            coeffs.push_back(Rational::from_string(c.get<std::string>()));
        FourierSeries out = q_expansion(f.d, f.weight, coeffs);
        out.level = f.level;
        if (j.contains("trace_bound"))
            out.trace_bound = Rational::from_string(j.at("trace_bound").get<std::string>());
        return out;
    }

    f.trace_bound = Rational(-1);
    for (const auto& entry : j.at("entries")) {
        const HermitianIndex h = HermitianIndex::from_json(f.n, f.d, entry.at("h"));
        f.set(h, json_to_qfe(entry.at("c"), f.d));
        f.trace_bound = std::max(f.trace_bound, h.trace());
    }
    if (j.contains("trace_bound"))
        f.trace_bound = Rational::from_string(j.at("trace_bound").get<std::string>());
    if (f.trace_bound < Rational(0)) f.trace_bound = Rational(0);
    return f;
}

FourierSeries FourierSeries::q_expansion(long d, int weight, const std::vector<Rational>& coeffs) {
    FourierSeries f;
    f.n = 1;
    f.d = d;
    f.weight = weight;
    f.trace_bound = Rational(static_cast<long>(coeffs.size()) - 1);
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m].is_zero()) continue;
        f.set(HermitianIndex::diagonal(d, {Rational(static_cast<long>(m))}),
              QuadFieldElement::real(coeffs[m], d));
    }
    return f;
}

QuadFieldElement evaluate_Q_at(const MultiPoly& q, const HermitianIndex& h1,
                               const HermitianIndex& h2) {
    if (h1.n() != h2.n() || h1.d() != h2.d())
        throw std::invalid_argument("evaluation pair: size or field mismatch");
    const int n = h1.n();
    const long d = h1.d();
    std::map<VarId, QuadFieldElement> point;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            point.emplace(var_w(i, j), h1.at(i, j));
            point.emplace(var_z(i, j), h2.at(i, j));
        }
    const QuadFieldElement value = q.evaluate(point, d);
    if (!value.is_real())
        throw std::logic_error("bracket value at a Hermitian pair must be real, got " +
                               value.to_string());
    return value;
}

FourierSeries apply_bracket(const FourierSeries& f1, const FourierSeries& f2,
                            const BracketCoefficients& bc) {
    if (f1.n != f2.n || f1.d != f2.d)
        throw std::invalid_argument("apply_bracket: series size or field mismatch");
    if (f1.n != bc.n) throw std::invalid_argument("apply_bracket: series size differs from bracket");
    if (f1.weight != bc.k1 || f2.weight != bc.k2)
        throw std::invalid_argument("apply_bracket: series weights do not match bracket weights");
    if (!f1.level.empty() && !f2.level.empty() && f1.level != f2.level)
        throw std::invalid_argument("apply_bracket: series level labels differ");

    const MultiPoly bracket = assemble_bracket(bc, q_generators(bc.n));

    FourierSeries out;
    out.n = f1.n;
    out.d = f1.d;
    out.weight = bc.k1 + bc.k2 + 2 * bc.v;
    out.level = f1.level.empty() ? f2.level : f1.level;
    // Coefficients at trace > min bound would need pairs outside an input
    // window; they are dropped rather than partially summed.
    out.trace_bound = std::min(f1.trace_bound, f2.trace_bound);

    std::map<HermitianIndex, QuadFieldElement> acc;
    for (const auto& [h1, c1] : f1.entries) {
        if (h1.trace() > out.trace_bound) continue;
        for (const auto& [h2, c2] : f2.entries) {
            const HermitianIndex h = h1 + h2;
            if (h.trace() > out.trace_bound) continue;
            const QuadFieldElement value = c1 * c2 * evaluate_Q_at(bracket, h1, h2);
            if (value.is_zero()) continue;
            auto [it, inserted] = acc.emplace(h, value);
            if (!inserted) it->second += value;
        }
    }
    for (const auto& [h, c] : acc)
        if (!c.is_zero()) out.set(h, c);
    return out;
}

bool is_cusp_supported(const FourierSeries& f) {
    for (const auto& [h, c] : f.entries) {
        if (c.is_zero()) continue;
        if (!h.is_positive_definite()) return false;
    }
    return true;
}

namespace {

QuadFieldElement sample_qfe(RationalSampler& sampler, long d) {
    return {sampler.next(), sampler.next(), d};
}

// h = M* M with M = R (I - w w*/(w*w)): positive semidefinite and
// annihilating w, so pairs built from one w share that kernel vector.
HermitianIndex psd_with_kernel(RationalSampler& sampler, int n, long d,
                               const std::vector<QuadFieldElement>& w) {
    QuadFieldElement norm = QuadFieldElement::zero(d);
    for (const auto& x : w) norm += x * x.conjugate();
    const Rational inv_norm = norm.re().inverse();

    QuadMatrix proj(static_cast<std::size_t>(n),
                       std::vector<QuadFieldElement>(static_cast<std::size_t>(n),
                                                     QuadFieldElement::zero(d)));
    for (int i = 0; i < n; ++i) {
        proj[i][i] += QuadFieldElement::one(d);
        for (int j = 0; j < n; ++j)
            proj[i][j] -= w[static_cast<std::size_t>(i)] *
                          w[static_cast<std::size_t>(j)].conjugate() * inv_norm;
    }

    QuadMatrix r(static_cast<std::size_t>(n),
                    std::vector<QuadFieldElement>(static_cast<std::size_t>(n),
                                                  QuadFieldElement::zero(d)));
    for (auto& row : r)
        for (auto& x : row) x = sample_qfe(sampler, d);

    QuadMatrix m(static_cast<std::size_t>(n),
                    std::vector<QuadFieldElement>(static_cast<std::size_t>(n),
                                                  QuadFieldElement::zero(d)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) m[i][j] += r[i][l] * proj[l][j];

    QuadMatrix h(static_cast<std::size_t>(n),
                    std::vector<QuadFieldElement>(static_cast<std::size_t>(n),
                                                  QuadFieldElement::zero(d)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) h[i][j] += m[l][i].conjugate() * m[l][j];
    return HermitianIndex(n, d, std::move(h));
}

}  // namespace

VerificationReport check_cusp_vanishing(int n, int v, int k1, int k2, int trials,
                                        std::uint64_t seed) {
    if (v < 1) throw std::invalid_argument("cusp vanishing requires degree v >= 1");
    VerificationReport rep;
    rep.check = "cusp_vanishing";
    rep.n = n;
    rep.v = v;
    rep.k1 = k1;
    rep.k2 = k2;
    rep.seed = seed;
    rep.pass = true;

    const long d = 1;  // Gaussian field; exercises full quad arithmetic
    const MultiPoly bracket = assemble_bracket(solve_coefficients(n, v, k1, k2), q_generators(n));

    RationalSampler sampler(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<QuadFieldElement> w;
        do {
            w.clear();
            for (int i = 0; i < n; ++i) w.push_back(sample_qfe(sampler, d));
        } while (std::all_of(w.begin(), w.end(),
                             [](const QuadFieldElement& x) { return x.is_zero(); }));

        const HermitianIndex h1 = psd_with_kernel(sampler, n, d, w);
        const HermitianIndex h2 = psd_with_kernel(sampler, n, d, w);
        const QuadFieldElement value = evaluate_Q_at(bracket, h1, h2);
        if (!value.is_zero()) {
            rep.pass = false;
            std::ostringstream os;
            os << "trial " << trial << ": Q(h1,h2) = " << value.to_string();
            rep.witness = os.str();
            break;
        }
    }
    return rep;
}

nlohmann::json WeightCondition::to_json() const {
    return {{"d", d}, {"v", v}, {"required_divisor", required_divisor}, {"satisfied", satisfied}};
}

WeightCondition weight_condition(long d, int v) {
    if (!is_square_free(d))
        throw std::invalid_argument("field parameter d must be positive and square-free");
    WeightCondition wc;
    wc.d = d;
    wc.v = v;
    // |mu(L)|/2 with unit index 1: Q(i) has 4 roots of unity, Q(sqrt(-3)) has
    // 6, every other imaginary quadratic field has 2.
    wc.required_divisor = (d == 1) ? 2 : (d == 3) ? 3 : 1;
    wc.satisfied = (v % wc.required_divisor) == 0;
    return wc;
}

}  // namespace hermrc
