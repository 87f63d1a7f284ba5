#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hadamat/classes.hpp"
#include "hadamat/errors.hpp"
#include "hadamat/filtered.hpp"
#include "hadamat/hadamard.hpp"
#include "hadamat/io.hpp"
#include "hadamat/linalg.hpp"
#include "hadamat/random_gen.hpp"
#include "hadamat/structure.hpp"
#include "hadamat/tau.hpp"
#include "hadamat/verify.hpp"

namespace {

using namespace hadamat;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    return read_file(path);
}

FileFormat parse_format(const std::string& name) {
    if (name == "plain") return FileFormat::plain;
    if (name == "json") return FileFormat::json;
    throw ParseError("unknown format: " + name);
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("HADAMAT_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

void print_verdict(const std::string& label, const Verdict& v) {
    std::cout << label << ": " << (v.ok ? "yes" : "no");
    if (!v.detail.empty()) std::cout << " (" << v.detail;
    if (v.where) std::cout << " at (" << v.where->first << "," << v.where->second << ")";
    if (!v.detail.empty()) std::cout << ")";
    std::cout << "\n";
}

int cmd_classify(const std::string& input, FileFormat fmt, double tol_abs) {
    const Matrix u = parse_matrix(read_input(input), fmt);
    const Tolerance tol{tol_abs, tol_abs};
    const ClassReport c = classify(u, tol);
    print_verdict("nonnegative", c.nonnegative);
    print_verdict("z_matrix", c.z_matrix);
    print_verdict("m_matrix", c.m_matrix);
    print_verdict("inverse_m", c.inverse_m);
    print_verdict("potential", c.potential);
    print_verdict("bipotential", c.bipotential);
    print_verdict("row_diag_dominant", c.row_diag_dominant);
    print_verdict("col_diag_dominant", c.col_diag_dominant);
    const StructureReport s = structure_report(u, tol);
    std::cout << "entrywise_diag_dominant: " << (s.is_entrywise_diag_dominant ? "yes" : "no") << "\n";
    std::cout << "gum: " << (s.gum.ok ? "yes" : "no");
    if (!s.gum.ok && s.gum.triple)
        std::cout << " (" << s.gum.detail << " at {" << (*s.gum.triple)[0] << ","
                  << (*s.gum.triple)[1] << "," << (*s.gum.triple)[2] << "})";
    std::cout << "\n";
    std::cout << "ultrametric: " << (s.is_ultrametric ? "yes" : "no") << "\n";
    std::cout << "nbf: " << (s.is_nbf ? "yes" : "no") << "\n";
    if (s.nbf_permutation) {
        std::cout << "nbf_permutation:";
        for (std::size_t i : *s.nbf_permutation) std::cout << " " << i + 1;
        std::cout << "\n";
    }
    if (s.gum_nonsingular)
        std::cout << "gum_nonsingular: " << (*s.gum_nonsingular ? "yes" : "no") << "\n";
    return 0;
}

int cmd_tau(const std::string& input, FileFormat fmt, double t_max, double tol_abs) {
    const Matrix u = parse_matrix(read_input(input), fmt);
    const TauResult r = tau_bisection(u, t_max, Tolerance{tol_abs, tol_abs});
    if (!r.value) {
        std::cout << "tau: inf\n";
    } else {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(8);
        os << *r.value;
        std::cout << "tau: " << os.str() << "\n";
        if (!r.certificate.empty()) std::cout << "certificate: " << r.certificate << "\n";
    }
    return 0;
}

int cmd_hadamard(const std::string& input, FileFormat fmt, const std::string& fn, double alpha) {
    const Matrix u = parse_matrix(read_input(input), fmt);
    std::cout << render_matrix(apply(fn_by_name(fn, alpha), u), fmt);
    return 0;
}

int cmd_invert(const std::string& input, FileFormat fmt) {
    const Matrix u = parse_matrix(read_input(input), fmt);
    std::cout << render_matrix(lu_invert(u), fmt);
    return 0;
}

void print_vector(const std::string& label, const Vector& v) {
    std::cout << label << ":";
    for (double x : v) std::cout << " " << format_real(x);
    std::cout << "\n";
}

int cmd_invert_filtered(const std::string& input, double t, double tol_abs) {
    const std::string text = read_input(input);
    const Tolerance tol{tol_abs, tol_abs};
    AlgoTrace tr;
    std::size_t n = 0;
    try {
        const SfmRep rep = parse_sfm(text);
        n = rep.n();
        tr = invert_sfm(rep, t, tol);
    } catch (const ParseError&) {
        const FilteredRep rep = parse_filtered(text);
        n = rep.n();
        tr = invert_filtered(rep, t, tol);
    }
    std::cout << "success: " << (tr.success ? "yes" : "no") << "\n";
    if (tr.stop_index) std::cout << "stop_index: " << *tr.stop_index << "\n";
    if (!tr.lambda_final.empty()) {
        print_vector("lambda_final", tr.lambda_final);
        print_vector("mu_final", tr.mu_final);
    }
    if (tr.success) {
        std::cout << "inverse (I - N):\n"
                  << render_matrix_plain(Matrix::identity(n) - tr.n_matrix);
    }
    return 0;
}

int cmd_generate(const std::string& kind, std::size_t n, std::uint64_t seed, FileFormat fmt) {
    auto rng = trial_rng(seed, 0);
    if (kind == "potential") {
        std::cout << render_matrix(random_potential(n, rng), fmt);
    } else if (kind == "bipotential") {
        std::cout << render_matrix(random_bipotential(n, rng), fmt);
    } else if (kind == "gum") {
        std::cout << render_matrix(generate_gum(n, seed), fmt);
    } else if (kind == "increasing_cbf") {
        std::cout << render_matrix(random_increasing_cbf(n, rng), fmt);
    } else if (kind == "sfm") {
        std::cout << render_sfm(generate_gum_sfm(n, seed));
    } else {
        throw ParseError("unknown kind: " + kind);
    }
    return 0;
}

int cmd_verify(const std::string& name, const HarnessConfig& cfg) {
    const SuiteResult res = run_suite(name, cfg);
    std::cout << "suite: " << res.name << "\n"
              << "trials: " << res.trials << "\n"
              << "violations: " << res.violations << "\n"
              << "max_residual: " << format_real(res.max_residual) << "\n";
    for (const auto& note : res.notes) std::cout << "note: " << note << "\n";
    return res.violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix class toolkit: entrywise matrix functions, inverse M-matrix "
                 "classification, hierarchical representations, and stability thresholds"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "plain";
    double tol_abs = 1e-9;
    double t_max = 1e6;
    double t_param = 1.0;
    double alpha = 2.0;
    std::string fn = "identity";
    std::string kind = "potential";
    std::size_t n = 4;
    HarnessConfig cfg;
    cfg.seed = default_seed();
    std::uint64_t seed = cfg.seed;
    std::string suite;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", input, "input file path, or - for stdin");
        sub->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
        sub->add_option("--tol", tol_abs, "absolute sign tolerance");
    };

    auto* classify = app.add_subcommand("classify", "membership verdicts with certificates");
    add_io(classify);
    auto* tau = app.add_subcommand("tau", "stability threshold by bisection");
    add_io(tau);
    tau->add_option("--t-max", t_max, "cap above which the threshold is reported as inf");
    auto* had = app.add_subcommand("hadamard", "apply an entrywise function");
    add_io(had);
    had->add_option("--fn", fn, "identity | pow | x2cos | expm1");
    had->add_option("--alpha", alpha, "exponent for --fn pow");
    auto* inv = app.add_subcommand("invert", "dense inverse via pivoted factorization");
    add_io(inv);
    auto* invf = app.add_subcommand("invert-filtered", "layered backward inversion of I + tU");
    add_io(invf);
    invf->add_option("--t", t_param, "scale parameter t");
    auto* gen = app.add_subcommand("generate", "seeded random instance");
    gen->add_option("--kind", kind, "potential | bipotential | gum | increasing_cbf | sfm");
    gen->add_option("--n", n, "matrix size");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    auto* ver = app.add_subcommand("verify", "randomized property suite");
    ver->add_option("name", suite, "suite name")->required();
    ver->add_option("--seed", cfg.seed, "base seed");
    ver->add_option("--trials", cfg.trials, "number of trials");
    ver->add_option("--n-max", cfg.n_max, "largest instance size");
    ver->add_option("--alpha", cfg.alphas, "power exponents");
    ver->add_option("--t-max", cfg.t_max, "bisection cap");
    ver->add_option("--tol", tol_abs, "absolute sign tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const FileFormat fmt = parse_format(format);
        if (classify->parsed()) return cmd_classify(input, fmt, tol_abs);
        if (tau->parsed()) return cmd_tau(input, fmt, t_max, tol_abs);
        if (had->parsed()) return cmd_hadamard(input, fmt, fn, alpha);
        if (inv->parsed()) return cmd_invert(input, fmt);
        if (invf->parsed()) return cmd_invert_filtered(input, t_param, tol_abs);
        if (gen->parsed()) return cmd_generate(kind, n, seed, fmt);
        if (ver->parsed()) {
            cfg.tol = Tolerance{tol_abs, tol_abs};
            return cmd_verify(suite, cfg);
        }
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
