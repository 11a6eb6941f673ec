#include "hermrc/fourier.hpp"
#include "hermrc/generators.hpp"
#include "hermrc/operators.hpp"
#include "hermrc/solver.hpp"
#include "hermrc/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using hermrc::BracketCoefficients;
using hermrc::FourierSeries;
using hermrc::MultiPoly;
using hermrc::Normalization;
using hermrc::QGeneratorSet;
using hermrc::VerificationReport;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandConfig {
    std::string subcommand;
    int n = 1;
    int v = 0;
    int k1 = 0;
    int k2 = 0;
    std::string f1_path;
    std::string f2_path;
    std::string output_path;
    std::string normalization = "integral";
    std::string format = "json";
    std::string suite = "fast";
    std::uint64_t seed = 1;
    long d = 0;  // 0 = not supplied
    bool expand = false;
    bool show_generators = false;
};

Normalization parse_normalization(const std::string& s) {
    if (s == "integral") return Normalization::integral;
    if (s == "unit") return Normalization::unit;
    throw UsageError("normalization must be 'integral' or 'unit'");
}

void emit(const CommandConfig& cfg, const std::string& text) {
    if (cfg.output_path.empty()) {
        std::cout << text << '\n';
        return;
    }
    std::ofstream out(cfg.output_path);
    if (!out) throw DataError("cannot open output file " + cfg.output_path);
    out << text << '\n';
}

nlohmann::json generators_json(const QGeneratorSet& gens) {
    nlohmann::json list = nlohmann::json::array();
    for (int a = 0; a <= gens.n; ++a)
        list.push_back({{"a", a}, {"text", gens.q(a).to_text()}, {"terms", gens.q(a).to_json()}});
    return list;
}

int run_bracket(const CommandConfig& cfg) {
    const BracketCoefficients bc =
        hermrc::solve_coefficients(cfg.n, cfg.v, cfg.k1, cfg.k2, parse_normalization(cfg.normalization));

    if (cfg.format == "text") {
        std::string text;
        for (const auto& [tuple, value] : bc.coeffs) {
            text += "C(";
            for (std::size_t i = 0; i < tuple.alpha.size(); ++i)
                text += (i ? "," : "") + std::to_string(tuple.alpha[i]);
            text += ") = " + value.to_string() + "\n";
        }
        if (cfg.expand) {
            const MultiPoly bracket = hermrc::assemble_bracket(bc, hermrc::q_generators(cfg.n));
            text += "Q = " + bracket.to_text() + "\n";
        }
        if (cfg.show_generators) {
            const QGeneratorSet gens = hermrc::q_generators(cfg.n);
            for (int a = 0; a <= gens.n; ++a)
                text += "Q_" + std::to_string(a) + " = " + gens.q(a).to_text() + "\n";
        }
        if (cfg.d != 0) {
            const auto wc = hermrc::weight_condition(cfg.d, cfg.v);
            text += "weight_condition: divisor " + std::to_string(wc.required_divisor) +
                    (wc.satisfied ? " divides v\n" : " does not divide v\n");
        }
        emit(cfg, text.empty() ? text : text.substr(0, text.size() - 1));
        return kExitOk;
    }

    nlohmann::json out = bc.to_json();
    if (cfg.expand) {
        const MultiPoly bracket = hermrc::assemble_bracket(bc, hermrc::q_generators(cfg.n));
        out["polynomial"] = {{"text", bracket.to_text()}, {"terms", bracket.to_json()}};
    }
    if (cfg.show_generators) out["generators"] = generators_json(hermrc::q_generators(cfg.n));
    if (cfg.d != 0) out["weight_condition"] = hermrc::weight_condition(cfg.d, cfg.v).to_json();
    emit(cfg, out.dump());
    return kExitOk;
}

int run_dim(const CommandConfig& cfg) {
    const VerificationReport rep = hermrc::dimension_basis(cfg.n, cfg.v, cfg.seed);
    nlohmann::json out = rep.to_json();
    if (cfg.show_generators) out["generators"] = generators_json(hermrc::q_generators(cfg.n));
    emit(cfg, out.dump());
    return rep.pass ? kExitOk : kExitVerifyFail;
}

int run_verify(const CommandConfig& cfg) {
    if (cfg.suite != "fast" && cfg.suite != "full")
        throw UsageError("suite must be 'fast' or 'full'");
    const bool full = cfg.suite == "full";

    std::vector<VerificationReport> reports;
    const BracketCoefficients bc = hermrc::solve_coefficients(cfg.n, cfg.v, cfg.k1, cfg.k2);
    const QGeneratorSet gens = hermrc::q_generators(cfg.n);
    const MultiPoly bracket = hermrc::assemble_bracket(bc, gens);

    {
        VerificationReport rep;
        rep.check = "laplace_zero";
        rep.n = cfg.n;
        rep.v = cfg.v;
        rep.k1 = cfg.k1;
        rep.k2 = cfg.k2;
        const MultiPoly image =
            hermrc::laplace_total(bracket, hermrc::OperatorContext{cfg.n, cfg.k1, cfg.k2});
        rep.pass = image.is_zero();
        if (!rep.pass) rep.witness = image.to_text();
        reports.push_back(rep);
    }

    if (cfg.n == 1) {
        VerificationReport rep;
        rep.check = "classical_agreement";
        rep.n = 1;
        rep.v = cfg.v;
        rep.k1 = cfg.k1;
        rep.k2 = cfg.k2;
        rep.pass = true;
        const BracketCoefficients unit =
            hermrc::solve_coefficients(1, cfg.v, cfg.k1, cfg.k2, Normalization::unit);
        for (const auto& [rs, value] : hermrc::classical_rc_coefficients(cfg.k1, cfg.k2, cfg.v)) {
            if (unit.at(hermrc::IndexTuple{{rs.first, rs.second}}) != value) {
                rep.pass = false;
                rep.witness = "mismatch at (r,s)=(" + std::to_string(rs.first) + "," +
                              std::to_string(rs.second) + ")";
                break;
            }
        }
        reports.push_back(rep);
    }

    reports.push_back(hermrc::check_homogeneity(bracket, cfg.n, cfg.v, 25, cfg.seed));

    {
        VerificationReport rep;
        rep.check = "integral_normalization";
        rep.n = cfg.n;
        rep.v = cfg.v;
        rep.k1 = cfg.k1;
        rep.k2 = cfg.k2;
        rep.pass = true;
        hermrc::Integer content(0);
        for (const auto& [t, c] : bc.coeffs) {
            if (!c.is_integer()) {
                rep.pass = false;
                rep.witness = "non-integer coefficient " + c.to_string();
                break;
            }
            content = hermrc::gcd(content, c.numerator());
        }
        if (rep.pass && !(content == 1)) {
            rep.pass = false;
            rep.witness = "content " + content.get_str() + " != 1";
        }
        reports.push_back(rep);
    }

    if (full) {
        if (cfg.k1 < cfg.n || cfg.k2 < cfg.n)
            throw UsageError("full suite requires k1, k2 >= n (association precondition)");
        reports.push_back(hermrc::check_pluriharmonic(bracket, cfg.n, cfg.k1, cfg.k2));
        if (cfg.n <= 2 && cfg.v <= 2)
            reports.push_back(hermrc::check_homogeneity_symbolic(bracket, cfg.n, cfg.v));
        reports.push_back(hermrc::dimension_basis(cfg.n, cfg.v, cfg.seed));
        reports.push_back(hermrc::check_minor_sums_independent(cfg.n, cfg.seed));
        if (cfg.n <= 2 && cfg.v <= 3)
            reports.push_back(hermrc::check_unique_up_to_scaling(cfg.n, cfg.v, cfg.k1, cfg.k2));
        if (cfg.v >= 1)
            reports.push_back(hermrc::check_cusp_vanishing(cfg.n, cfg.v, cfg.k1, cfg.k2, 25, cfg.seed));
    }

    bool all_pass = true;
    for (auto& rep : reports) {
        // checks that take no v/k leave them zero; stamp the invocation's values
        if (rep.v == 0) rep.v = cfg.v;
        if (rep.k1 == 0) rep.k1 = cfg.k1;
        if (rep.k2 == 0) rep.k2 = cfg.k2;
        std::cout << rep.to_json().dump() << '\n';
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

FourierSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open input file " + path);
    nlohmann::json j;
    try {
        in >> j;
        return FourierSeries::from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw DataError("bad series file " + path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw DataError("bad series file " + path + ": " + e.what());
    }
}

int run_apply(const CommandConfig& cfg) {
    const FourierSeries f1 = load_series(cfg.f1_path);
    const FourierSeries f2 = load_series(cfg.f2_path);
    if (f1.weight != cfg.k1 || f2.weight != cfg.k2)
        throw DataError("series weights (" + std::to_string(f1.weight) + "," +
                        std::to_string(f2.weight) + ") do not match --k1/--k2");
    if (f1.n != cfg.n || f2.n != cfg.n) throw DataError("series size does not match --n");

    const BracketCoefficients bc =
        hermrc::solve_coefficients(cfg.n, cfg.v, cfg.k1, cfg.k2, parse_normalization(cfg.normalization));
    const FourierSeries g = hermrc::apply_bracket(f1, f2, bc);

    const std::string summary =
        std::string("cusp_supported: ") + (hermrc::is_cusp_supported(g) ? "true" : "false") +
        " (weight " + std::to_string(g.weight) + ", " + std::to_string(g.entries.size()) +
        " coefficients, trace bound " + g.trace_bound.to_string() + ")";
    if (cfg.output_path.empty()) {
        std::cout << g.to_json().dump() << '\n';
        std::cerr << summary << '\n';
    } else {
        emit(cfg, g.to_json().dump());
        std::cout << summary << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rankin-Cohen type brackets for Hermitian modular forms"};
    app.require_subcommand(1);
    CommandConfig cfg;

    auto add_common = [&cfg](CLI::App* cmd, bool weights) {
        cmd->add_option("--n", cfg.n, "matrix size n")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--v", cfg.v, "bracket degree v")->check(CLI::NonNegativeNumber);
        if (weights) {
            cmd->add_option("--k1", cfg.k1, "first weight")->required();
            cmd->add_option("--k2", cfg.k2, "second weight")->required();
        }
        cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
        cmd->add_option("--format", cfg.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--output", cfg.output_path, "output file (default stdout)");
    };

    CLI::App* bracket = app.add_subcommand("bracket", "solve bracket coefficients");
    add_common(bracket, true);
    bracket->get_option("--v")->required();
    bracket->add_option("--normalization", cfg.normalization, "integral or unit")
        ->check(CLI::IsMember({"integral", "unit"}));
    bracket->add_option("--d", cfg.d, "field parameter for the weight-condition advisory");
    bracket->add_flag("--expand", cfg.expand, "include the expanded polynomial");
    bracket->add_flag("--show-generators", cfg.show_generators, "include Q_0..Q_n");

    CLI::App* dim = app.add_subcommand("dim", "dimension/basis certificate for Q_{n,v}(2)");
    add_common(dim, false);
    dim->get_option("--v")->required();
    dim->add_flag("--show-generators", cfg.show_generators, "include Q_0..Q_n");

    CLI::App* verify = app.add_subcommand("verify", "run verification suite");
    add_common(verify, true);
    verify->get_option("--v")->required();
    verify->add_option("--suite", cfg.suite, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));

    CLI::App* apply = app.add_subcommand("apply", "apply a bracket to two Fourier series files");
    add_common(apply, true);
    apply->get_option("--v")->required();
    apply->add_option("--f1", cfg.f1_path, "first series file")->required();
    apply->add_option("--f2", cfg.f2_path, "second series file")->required();
    apply->add_option("--normalization", cfg.normalization, "integral or unit")
        ->check(CLI::IsMember({"integral", "unit"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error[usage]: " << e.what() << '\n';
        return kExitUsage;
    }

    if (const char* env_seed = std::getenv("RC_SEED")) {
        try {
            cfg.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            std::cerr << "error[usage]: RC_SEED is not an integer\n";
            return kExitUsage;
        }
    }

    try {
        if (bracket->parsed()) return run_bracket(cfg);
        if (dim->parsed()) return run_dim(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (apply->parsed()) return run_apply(cfg);
        std::cerr << "error[usage]: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error[usage]: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "error[data]: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error[usage]: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << '\n';
        return kExitData;
    }
}
