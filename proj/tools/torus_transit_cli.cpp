// Command-line front end: constructs the explicit example family,
// certifies transitivity, runs exact conservativity checks, and drives
// the numerical explorations. Exit codes: 0 affirmative, 1 negative or
// inconclusive finding, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torustransit/certifier.hpp"
#include "torustransit/errors.hpp"
#include "torustransit/example_family.hpp"
#include "torustransit/exact_algebra.hpp"
#include "torustransit/simulator.hpp"
#include "torustransit/system_io.hpp"

namespace tt = torustransit;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

tt::IMat matrix_from_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw tt::InvalidInput("matrix must be JSON rows, e.g. [[2,0],[1,3]]");
    }
    if (!j.is_array() || j.empty()) throw tt::InvalidInput("matrix must be a nonempty array of rows");
    const size_t rows = j.size();
    const size_t cols = j[0].size();
    tt::IMat m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw tt::InvalidInput("matrix rows must have equal length");
        for (size_t k = 0; k < cols; ++k) {
            const auto& e = j[i][k];
            if (e.is_number_integer())
                m(i, k) = tt::Int(e.get<long>());
            else if (e.is_string())
                m(i, k) = tt::Int(e.get<std::string>());
            else
                throw tt::InvalidInput("matrix entries must be integers");
        }
    }
    return m;
}

std::vector<tt::QVec> basis_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw tt::InvalidInput("cannot open basis file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error&) {
        throw tt::InvalidInput("basis file must be a JSON array of rational vectors");
    }
    std::vector<tt::QVec> basis;
    for (const auto& row : j) {
        tt::QVec v;
        for (const auto& e : row) {
            if (e.is_string())
                v.push_back(tt::parse_rational(e.get<std::string>()));
            else if (e.is_number_integer())
                v.push_back(tt::Rational(tt::Int(e.get<long>())));
            else
                throw tt::InvalidInput("basis entries must be \"p/q\" strings");
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    tt::write_text_file(path, text);
}

std::vector<double> parse_start_point(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

// Options shared by the simulation subcommands.
struct SimulateArgs {
    std::string system_path;
    std::string out_path;
    std::string start;
    long length = 0;
    long samples = 0;
    int grid = 0;
    uint64_t seed = 0;
    bool seed_set = false;
};

ordered_json base_config(const SimulateArgs& a) {
    ordered_json cfg;
    cfg["system"] = a.system_path;
    return cfg;
}

int run_example(size_t n, const std::string& k_text, const std::string& lambda_text,
                const std::string& perturb_text, const std::string& out_path) {
    tt::ExampleParams params{n, tt::Int(k_text), tt::parse_rational(lambda_text)};
    tt::SkewProductSystem sys =
        perturb_text.empty()
            ? tt::build_example(params)
            : tt::build_nonconservative_example(params, tt::parse_rational(perturb_text));

    ordered_json cfg;
    cfg["subcommand"] = "example";
    cfg["n"] = n;
    cfg["k"] = k_text;
    cfg["lambda"] = lambda_text;
    if (!perturb_text.empty()) cfg["perturb_slope"] = perturb_text;
    cfg["out"] = out_path;
    std::cout << "config: " << cfg.dump() << "\n";

    const auto report = tt::example_identities(params);
    for (const auto& check : report.checks)
        std::cout << (check.ok ? "[ok]   " : "[FAIL] ") << check.name << ": "
                  << tt::format_rational(check.lhs) << " == " << tt::format_rational(check.rhs)
                  << "\n";
    if (!perturb_text.empty())
        std::cout << "note: slope perturbed by " << perturb_text
                  << "; this variant is deliberately non-conservative\n";

    write_or_print(out_path, tt::system_to_json_text(sys));
    return report.all_ok() ? kExitOk : kExitNegative;
}

int run_analyze(const std::string& system_path, long samples, uint64_t seed,
                bool assume_volume, bool assume_base, const std::string& out_path) {
    const tt::SkewProductSystem sys = tt::load_system_file(system_path);

    tt::Assumptions assumptions;
    if (assume_volume) {
        assumptions.volume_preserving = tt::VolumeStatus::Declared;
    } else {
        const auto volume = tt::verify_volume_preservation(sys, samples, seed);
        if (volume.ok) {
            assumptions.volume_preserving = tt::VolumeStatus::VerifiedExact;
            assumptions.volume_samples = volume.samples;
            assumptions.volume_symbolic = volume.symbolic;
        }
    }
    if (assume_base) {
        assumptions.base_transitive = tt::BaseStatus::Declared;
        assumptions.base_detail = "declared by flag";
    } else {
        const auto base = tt::base_transitivity(sys.base());
        assumptions.base_transitive = base.status;
        assumptions.base_detail = base.reason;
    }

    const tt::Certificate cert = tt::certify(sys, assumptions);

    ordered_json j = ordered_json::parse(tt::certificate_to_json(cert));
    ordered_json cfg;
    cfg["subcommand"] = "analyze";
    cfg["system"] = system_path;
    cfg["samples"] = samples;
    cfg["seed"] = seed;
    cfg["assume_volume_preserving"] = assume_volume;
    cfg["assume_base_transitive"] = assume_base;
    j["config"] = cfg;

    const std::string text = j.dump(2) + "\n";
    write_or_print(out_path, text);
    if (!out_path.empty() && out_path != "-")
        std::cout << "verdict: " << (cert.verdict == tt::Verdict::Transitive ? "transitive" : "inconclusive")
                  << " (rule: " << tt::rule_name(cert.rule) << ")\n";
    return cert.verdict == tt::Verdict::Transitive ? kExitOk : kExitNegative;
}

int run_verify(const std::string& system_path, long samples, uint64_t seed,
               const std::string& out_path) {
    const tt::SkewProductSystem sys = tt::load_system_file(system_path);
    const auto result = tt::verify_volume_preservation(sys, samples, seed);

    ordered_json j;
    j["conservative"] = result.ok;
    j["samples_verified"] = result.samples;
    j["symbolic_proof"] = result.symbolic;
    if (result.witness) {
        ordered_json w = ordered_json::array();
        for (const auto& q : *result.witness) w.push_back(tt::format_rational(q));
        j["witness_point"] = w;
        j["witness_jacobian_sum"] = tt::format_rational(*result.witness_sum);
    }
    ordered_json cfg;
    cfg["subcommand"] = "verify";
    cfg["system"] = system_path;
    cfg["samples"] = samples;
    cfg["seed"] = seed;
    j["config"] = cfg;

    write_or_print(out_path.empty() ? "-" : out_path, j.dump(2) + "\n");
    if (result.ok)
        std::cout << "conservative: verified at " << result.samples << " points"
                  << (result.symbolic ? " (and symbolically via the family identities)" : "")
                  << "\n";
    else
        std::cout << "not conservative: reciprocal-Jacobian sum "
                  << tt::format_rational(*result.witness_sum) << " at "
                  << tt::format_qvec(*result.witness) << "\n";
    return result.ok ? kExitOk : kExitNegative;
}

int run_orbit(const SimulateArgs& a) {
    const tt::SkewProductSystem sys = tt::load_system_file(a.system_path);
    tt::OrbitConfig cfg;
    cfg.length = a.length;
    cfg.seed = a.seed;
    cfg.random_start = a.start.empty();
    if (!cfg.random_start) cfg.start = parse_start_point(a.start);
    const auto points = tt::orbit(sys, cfg);

    ordered_json jc = base_config(a);
    jc["subcommand"] = "simulate orbit";
    jc["length"] = a.length;
    jc["seed"] = a.seed;
    jc["start"] = a.start.empty() ? "random" : a.start;

    std::ostringstream csv;
    csv << "# config: " << jc.dump() << "\n";
    csv << "step";
    for (size_t i = 1; i <= sys.dim(); ++i) csv << ",x" << i;
    csv << "\n";
    for (size_t s = 0; s < points.size(); ++s) {
        csv << s;
        for (double c : points[s]) csv << "," << format_double(c);
        csv << "\n";
    }
    write_or_print(a.out_path, csv.str());
    return kExitOk;
}

int run_coverage(const SimulateArgs& a) {
    const tt::SkewProductSystem sys = tt::load_system_file(a.system_path);
    tt::OrbitConfig cfg;
    cfg.length = a.length;
    cfg.seed = a.seed;
    cfg.random_start = a.start.empty();
    if (!cfg.random_start) cfg.start = parse_start_point(a.start);
    const auto report = tt::coverage(tt::orbit(sys, cfg), a.grid);

    ordered_json jc = base_config(a);
    jc["subcommand"] = "simulate coverage";
    jc["length"] = a.length;
    jc["grid"] = a.grid;
    jc["seed"] = a.seed;
    jc["start"] = a.start.empty() ? "random" : a.start;

    std::ostringstream csv;
    csv << "# config: " << jc.dump() << "\n";
    csv << "grid,visited,total_cells,fraction,steps\n";
    csv << report.grid << "," << report.visited << "," << report.total_cells << ","
        << format_double(report.fraction) << "," << report.steps << "\n";
    write_or_print(a.out_path, csv.str());
    std::cout << "coverage: " << report.visited << "/" << report.total_cells << " cells ("
              << format_double(report.fraction) << ")\n";
    return kExitOk;
}

int run_uniformity(const SimulateArgs& a) {
    const tt::SkewProductSystem sys = tt::load_system_file(a.system_path);
    const auto report = tt::pushforward_uniformity(sys, a.samples, a.grid, a.seed);

    ordered_json jc = base_config(a);
    jc["subcommand"] = "simulate uniformity";
    jc["samples"] = a.samples;
    jc["grid"] = a.grid;
    jc["seed"] = a.seed;

    std::ostringstream csv;
    csv << "# config: " << jc.dump() << "\n";
    csv << "samples,grid,cells,statistic,threshold,pass\n";
    csv << report.samples << "," << report.grid << "," << report.cells << ","
        << format_double(report.statistic) << "," << format_double(report.threshold) << ","
        << (report.pass ? "true" : "false") << "\n";
    write_or_print(a.out_path, csv.str());
    std::cout << "chi-square: " << format_double(report.statistic) << " vs 99.9% quantile "
              << format_double(report.threshold) << " -> " << (report.pass ? "pass" : "fail")
              << "\n";
    return report.pass ? kExitOk : kExitNegative;
}

int run_surface(const std::string& system_path, long grid, int depth, bool residual,
                const std::string& out_path) {
    const tt::SkewProductSystem sys = tt::load_system_file(system_path);
    const auto samples = tt::surface(sys, grid, depth);

    ordered_json jc;
    jc["subcommand"] = "surface";
    jc["system"] = system_path;
    jc["grid"] = grid;
    jc["depth"] = depth;

    const size_t m = sys.dim() - 1;
    std::ostringstream csv;
    csv << "# config: " << jc.dump() << "\n";
    csv << (m == 1 ? "x1,a,b,depth" : "x1,x2,a,b,depth") << "\n";
    for (const auto& s : samples) {
        for (size_t i = 0; i < m; ++i) csv << format_double(s.base_point[i].get_d()) << ",";
        csv << format_double(s.lower) << "," << format_double(s.upper) << "," << s.depth << "\n";
    }
    write_or_print(out_path, csv.str());
    if (residual) {
        const double r = tt::surface_invariance_residual(sys, samples);
        std::cout << "invariance residual: " << format_double(r) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, certify, and numerically explore volume-preserving "
                 "skew products of the n-torus"};
    app.require_subcommand(1);

    // example
    auto* cmd_example = app.add_subcommand("example", "emit a system of the explicit family");
    size_t ex_n = 2;
    std::string ex_k = "2", ex_lambda, ex_perturb, ex_out = "-";
    cmd_example->add_option("--n", ex_n, "torus dimension (>= 2)")->required();
    cmd_example->add_option("--k", ex_k, "fiber degree (>= 2)")->required();
    cmd_example->add_option("--lambda", ex_lambda, "contraction rate p/q in (1/2, 1)")->required();
    cmd_example->add_option("--perturb-slope", ex_perturb,
                            "offset the contracting slope (negative control; breaks conservativity)");
    cmd_example->add_option("--out", ex_out, "output path for the system JSON (- for stdout)");

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "apply the transitivity criteria");
    std::string an_system, an_out = "-";
    long an_samples = 100;
    uint64_t an_seed = 1;
    bool an_assume_volume = false, an_assume_base = false;
    cmd_analyze->add_option("--system", an_system, "system JSON path")->required();
    cmd_analyze->add_option("--samples", an_samples, "conservativity sample count (default 100)");
    cmd_analyze->add_option("--seed", an_seed, "sampling seed (default 1)");
    cmd_analyze->add_flag("--assume-volume-preserving", an_assume_volume,
                          "declare conservativity instead of sampling");
    cmd_analyze->add_flag("--assume-base-transitive", an_assume_base,
                          "declare base transitivity");
    cmd_analyze->add_option("--out", an_out, "certificate output path (- for stdout)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "exact conservativity sampling");
    std::string ve_system, ve_out;
    long ve_samples = 0;
    uint64_t ve_seed = 1;
    cmd_verify->add_option("--system", ve_system, "system JSON path")->required();
    cmd_verify->add_option("--samples", ve_samples, "number of sample points (> 0)")->required();
    cmd_verify->add_option("--seed", ve_seed, "sampling seed (default 1)");
    cmd_verify->add_option("--out", ve_out, "report output path");

    // simulate orbit|coverage|uniformity
    auto* cmd_simulate = app.add_subcommand("simulate", "double-precision exploration");
    cmd_simulate->require_subcommand(1);
    SimulateArgs sim;
    auto* sim_orbit = cmd_simulate->add_subcommand("orbit", "forward orbit CSV");
    sim_orbit->add_option("--system", sim.system_path)->required();
    sim_orbit->add_option("--length", sim.length, "orbit length (>= 1)")->required();
    sim_orbit->add_option("--start", sim.start, "start point x1,...,xn (default: random)");
    sim_orbit->add_option("--seed", sim.seed, "seed for random start (default 1)");
    sim_orbit->add_option("--out", sim.out_path, "CSV output path")->required();

    auto* sim_cov = cmd_simulate->add_subcommand("coverage", "orbit grid-coverage summary");
    sim_cov->add_option("--system", sim.system_path)->required();
    sim_cov->add_option("--length", sim.length)->required();
    sim_cov->add_option("--grid", sim.grid, "cells per axis (>= 2)")->required();
    sim_cov->add_option("--start", sim.start);
    sim_cov->add_option("--seed", sim.seed);
    sim_cov->add_option("--out", sim.out_path)->required();

    auto* sim_uni = cmd_simulate->add_subcommand("uniformity", "push-forward chi-square smoke test");
    sim_uni->add_option("--system", sim.system_path)->required();
    sim_uni->add_option("--samples", sim.samples, "sample count (>= grid^n)")->required();
    sim_uni->add_option("--grid", sim.grid)->required();
    sim_uni->add_option("--seed", sim.seed)->required();
    sim_uni->add_option("--out", sim.out_path)->required();

    // surface
    auto* cmd_surface = app.add_subcommand("surface", "invariant-set fiber intervals");
    std::string su_system, su_out;
    long su_grid = 0;
    int su_depth = 0;
    bool su_residual = false;
    cmd_surface->add_option("--system", su_system)->required();
    cmd_surface->add_option("--grid", su_grid, "base grid points per axis")->required();
    cmd_surface->add_option("--depth", su_depth, "pullback depth")->required();
    cmd_surface->add_flag("--residual", su_residual, "also print the invariance residual");
    cmd_surface->add_option("--out", su_out, "CSV output path")->required();

    // algebra
    auto* cmd_algebra = app.add_subcommand("algebra", "exact integer/rational matrix criteria");
    cmd_algebra->require_subcommand(1);
    std::string al_matrix, al_eigen, al_basis;
    size_t al_m = 1;
    auto* al_charpoly = cmd_algebra->add_subcommand("charpoly", "characteristic polynomial");
    al_charpoly->add_option("--matrix", al_matrix, "integer matrix as JSON rows")->required();
    auto* al_compound = cmd_algebra->add_subcommand("compound", "matrix of m x m minors");
    al_compound->add_option("--matrix", al_matrix)->required();
    al_compound->add_option("--m", al_m, "minor order")->required();
    auto* al_snf = cmd_algebra->add_subcommand("snf", "Smith normal form U A V = D");
    al_snf->add_option("--matrix", al_matrix)->required();
    auto* al_hyper = cmd_algebra->add_subcommand("hyperplane", "transverse invariant hyperplane witness");
    al_hyper->add_option("--matrix", al_matrix)->required();
    al_hyper->add_option("--eigen", al_eigen, "fiber eigenvalue (signed integer)")->required();
    auto* al_divides = cmd_algebra->add_subcommand("divides", "restriction determinant divisibility");
    al_divides->add_option("--matrix", al_matrix)->required();
    al_divides->add_option("--basis", al_basis, "JSON file with subspace basis vectors")->required();
    auto* al_diag = cmd_algebra->add_subcommand("diag", "diagonalizability over Q");
    al_diag->add_option("--matrix", al_matrix)->required();
    auto* al_pd = cmd_algebra->add_subcommand("pd", "positive definiteness (symmetric input)");
    al_pd->add_option("--matrix", al_matrix)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (cmd_example->parsed())
            return run_example(ex_n, ex_k, ex_lambda, ex_perturb, ex_out);
        if (cmd_analyze->parsed())
            return run_analyze(an_system, an_samples, an_seed, an_assume_volume, an_assume_base,
                               an_out);
        if (cmd_verify->parsed()) return run_verify(ve_system, ve_samples, ve_seed, ve_out);
        if (sim_orbit->parsed()) return run_orbit(sim);
        if (sim_cov->parsed()) return run_coverage(sim);
        if (sim_uni->parsed()) return run_uniformity(sim);
        if (cmd_surface->parsed())
            return run_surface(su_system, su_grid, su_depth, su_residual, su_out);

        if (al_charpoly->parsed()) {
            std::cout << tt::format_poly(tt::char_poly(matrix_from_text(al_matrix))) << "\n";
            return kExitOk;
        }
        if (al_compound->parsed()) {
            std::cout << tt::format_matrix(tt::compound_matrix(matrix_from_text(al_matrix), al_m));
            return kExitOk;
        }
        if (al_snf->parsed()) {
            const auto snf = tt::smith_normal_form(matrix_from_text(al_matrix));
            std::cout << "D:\n" << tt::format_matrix(snf.d) << "U:\n" << tt::format_matrix(snf.u)
                      << "V:\n" << tt::format_matrix(snf.v);
            return kExitOk;
        }
        if (al_hyper->parsed()) {
            const auto w =
                tt::transverse_invariant_hyperplane(matrix_from_text(al_matrix), tt::Int(al_eigen));
            if (!w) {
                std::cout << "none\n";
                return kExitNegative;
            }
            std::cout << tt::format_qvec(*w) << "\n";
            return kExitOk;
        }
        if (al_divides->parsed()) {
            const tt::IMat a = matrix_from_text(al_matrix);
            const auto result = tt::restriction_determinant_divides(a, basis_from_file(al_basis));
            std::cout << "det_restricted = " << tt::format_rational(result.det_restricted)
                      << ", det = " << tt::det(a).get_str() << ", divides = "
                      << (result.divides ? "true" : "false") << "\n";
            return result.divides ? kExitOk : kExitNegative;
        }
        if (al_diag->parsed()) {
            const bool d = tt::is_diagonalizable(matrix_from_text(al_matrix));
            std::cout << (d ? "true" : "false") << "\n";
            return d ? kExitOk : kExitNegative;
        }
        if (al_pd->parsed()) {
            const bool p = tt::positive_definite(matrix_from_text(al_matrix));
            std::cout << (p ? "true" : "false") << "\n";
            return p ? kExitOk : kExitNegative;
        }
    } catch (const tt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
