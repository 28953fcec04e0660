// Command-line front end: entropy measures and sharp trace-distance bounds
// for quantum states, plus the verification and fuzzing drivers.
//
// Exit codes: 0 success, 1 usage/parse error, 2 infeasible input,
// 3 property/bound violation.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "entrobound/bounds.hpp"
#include "entrobound/entropy.hpp"
#include "entrobound/format.hpp"
#include "entrobound/matrix_io.hpp"
#include "entrobound/sharpness.hpp"
#include "entrobound/verification.hpp"

namespace {

using namespace entrobound;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitViolation = 3;

int default_threads() {
    if (const char* env = std::getenv("ENTROBOUND_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
        std::cerr << "warning: ignoring invalid ENTROBOUND_THREADS=" << env << "\n";
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

struct ComputeOptions {
    std::string rho_path;
    std::string sigma_path;
    std::string states = "density";
    double c_d = 1.0 / std::log(2.0);
};

int run_compute(const ComputeOptions& opt) {
    const HermitianMatrix rho = load_matrix_json(opt.rho_path);
    const HermitianMatrix sigma = load_matrix_json(opt.sigma_path);
    if (rho.dim() != sigma.dim()) {
        throw std::domain_error("states must share a dimension");
    }
    const bool density = opt.states == "density";
    for (const auto& [name, m] : {std::pair{"rho", &rho}, std::pair{"sigma", &sigma}}) {
        if (!is_psd(*m, 1e-10)) {
            throw std::domain_error(std::string(name) + " is not positive semidefinite");
        }
        if (density && std::abs(m->trace() - 1.0) > 1e-10) {
            throw std::domain_error(std::string(name) +
                                    " is not a density matrix (trace differs from 1); "
                                    "use --states positive for non-normalised inputs");
        }
    }

    std::cout << "S(rho||sigma) = " << format_extended(relative_entropy(rho, sigma)) << "\n"
              << "T = " << format_real(trace_distance(rho, sigma)) << "\n"
              << "alpha = " << format_real(min_eigenvalue(rho)) << "\n"
              << "beta = " << format_real(min_eigenvalue(sigma)) << "\n"
              << "S(rho) = " << format_real(von_neumann_entropy(rho)) << "\n"
              << "S(sigma) = " << format_real(von_neumann_entropy(sigma)) << "\n";
    if (density) {
        const RegularisationConfig cfg(rho.dim(), opt.c_d);
        std::cout << "R = " << format_real(regularised_relative_entropy(rho, sigma, cfg))
                  << "\n";
    }
    return kExitOk;
}

struct BoundOptions {
    std::string which;
    double t = 0.0;
    double alpha = 0.0;
    double beta = 1.0;
    double c_d = 1.0 / std::log(2.0);
};

int run_bound(const BoundOptions& opt, bool beta_given) {
    if (opt.which == "prop") {
        std::cout << format_real(bound_proposition(opt.t, opt.alpha)) << "\n";
    } else if (opt.which == "theorem") {
        std::cout << format_real(bound_theorem(BoundInput(opt.t, opt.alpha, opt.beta))) << "\n";
    } else if (opt.which == "cor1") {
        std::cout << format_real(bound_corollary1(opt.t, opt.beta)) << "\n";
    } else {  // cor2: both floors default to the envelope case beta = 0
        const double beta = beta_given ? opt.beta : 0.0;
        const CorollaryTwoBounds b =
            bound_corollary2(opt.t, opt.alpha, beta, RegularisationConfig(3, opt.c_d));
        std::cout << format_real(b.q) << " " << format_real(b.q2) << "\n";
    }
    return kExitOk;
}

struct SweepOptions {
    std::string which;
    double alpha = 0.0;
    double beta = 1.0;
    double t_min = 0.0;
    double t_max = 1.0;
    int steps = 11;
    double c_d = 1.0 / std::log(2.0);
    std::string out_path;
};

// entropy of the matching equality family, when one exists at this point
std::optional<double> sweep_equality_entropy(const std::string& which, double t, double alpha,
                                             double beta, double c_d) {
    try {
        if (which == "prop") {
            auto [a, b] = extremal_pair_proposition(t, alpha);
            return relative_entropy(a, b).value();
        }
        if (which == "theorem" || which == "cor1") {
            const double a = which == "cor1" ? std::max(0.0, beta - t) : alpha;
            auto [rho, sigma] = equality_states_theorem(BoundInput(t, a, beta), 3);
            return relative_entropy(rho, sigma).value();
        }
        if (alpha == 0.0 && beta == 0.0 && t <= 1.0) {  // cor2 family has both floors at zero
            auto [rho, sigma] = equality_states_corollary2(t);
            return regularised_relative_entropy(rho, sigma, RegularisationConfig(3, c_d));
        }
    } catch (const std::domain_error&) {
    }
    return std::nullopt;
}

int run_sweep(const SweepOptions& opt, bool beta_given) {
    const double cor2_beta = beta_given ? opt.beta : 0.0;
    if (opt.steps < 1) throw std::domain_error("sweep needs at least one step");
    if (opt.t_max < opt.t_min) throw std::domain_error("sweep needs t-max >= t-min");

    std::vector<double> ts;
    for (int i = 0; i < opt.steps; ++i) {
        ts.push_back(opt.steps == 1
                         ? opt.t_min
                         : opt.t_min + (opt.t_max - opt.t_min) * i / (opt.steps - 1));
    }

    std::ostringstream csv;
    if (opt.which == "cor2") {
        csv << "T,q,q2,entropy_at_equality\n";
    } else {
        csv << "T,bound,entropy_at_equality\n";
    }
    for (double t : ts) {
        const std::optional<double> eq = sweep_equality_entropy(
            opt.which, t, opt.alpha, opt.which == "cor2" ? cor2_beta : opt.beta, opt.c_d);
        const std::string eq_cell = eq ? format_real(*eq) : std::string();
        if (opt.which == "prop") {
            csv << format_real(t) << "," << format_real(bound_proposition(t, opt.alpha)) << ","
                << eq_cell << "\n";
        } else if (opt.which == "theorem") {
            csv << format_real(t) << ","
                << format_real(bound_theorem(BoundInput(t, opt.alpha, opt.beta))) << ","
                << eq_cell << "\n";
        } else if (opt.which == "cor1") {
            csv << format_real(t) << "," << format_real(bound_corollary1(t, opt.beta)) << ","
                << eq_cell << "\n";
        } else {
            const CorollaryTwoBounds b =
                bound_corollary2(t, opt.alpha, cor2_beta, RegularisationConfig(3, opt.c_d));
            csv << format_real(t) << "," << format_real(b.q) << "," << format_real(b.q2) << ","
                << eq_cell << "\n";
        }
    }

    if (opt.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw MatrixParseError("cannot open output file: " + opt.out_path);
        out << csv.str();
    }
    return kExitOk;
}

struct FuzzOptions {
    int dim = 3;
    long samples = 1000;
    std::uint64_t seed = 0;
    std::string which = "theorem";
    std::string out_path;
    int threads = default_threads();
};

int run_fuzz(const FuzzOptions& opt) {
    if (opt.dim < 2) throw std::domain_error("fuzz needs dim >= 2");
    const std::optional<BoundKind> kind = bound_kind_from_string(opt.which);
    if (!kind) throw std::domain_error("unknown bound selector: " + opt.which);

    SamplerConfig cfg;
    cfg.dim = opt.dim;
    cfg.seed = opt.seed;
    const FuzzResult result = fuzz_slack(cfg, opt.samples, *kind, {}, opt.threads);

    std::ostringstream csv;
    csv << "T,alpha,beta,entropy,bound,slack\n";
    for (const SlackRecord& rec : result.records) {
        csv << format_real(rec.t) << "," << format_real(rec.alpha) << ","
            << format_real(rec.beta) << "," << format_real(rec.entropy) << ","
            << format_real(rec.bound) << "," << format_real(rec.slack) << "\n";
    }
    if (opt.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw MatrixParseError("cannot open output file: " + opt.out_path);
        out << csv.str();
    }

    const long violations = result.violations();
    std::cout << "fuzz: which=" << opt.which << " samples=" << opt.samples
              << " kept=" << result.records.size() << " skipped=" << result.skipped
              << " violations=" << violations << " min_slack=" << format_real(result.min_slack())
              << "\n";
    return violations == 0 ? kExitOk : kExitViolation;
}

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 0;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<CheckResult> checks;
    if (opt.suite == "integrals") checks = verify_integrals(opt.seed);
    else if (opt.suite == "lemmas") checks = verify_lemmas(opt.seed);
    else if (opt.suite == "bounds") checks = verify_bounds(opt.seed);
    else checks = verify_all(opt.seed);

    long failures = 0;
    for (const CheckResult& check : checks) {
        std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.name
                  << "  measured=" << format_real(check.measured)
                  << " tol=" << format_real(check.tolerance);
        if (!check.detail.empty()) std::cout << "  [" << check.detail << "]";
        std::cout << "\n";
        if (!check.pass) ++failures;
    }
    std::cout << "verify: suite=" << opt.suite << " seed=" << opt.seed << " checks="
              << checks.size() << " failures=" << failures << "\n";
    return failures == 0 ? kExitOk : kExitViolation;
}

struct SharpnessOptions {
    int dim = 3;
    double alpha = 0.1;
    double beta = 0.1;
    double t_min = 0.1;
    double t_max = 0.3;
    int steps = 3;
    int restarts = 10;
    std::uint64_t seed = 0;
    std::string out_path;
};

int run_sharpness(const SharpnessOptions& opt) {
    if (opt.steps < 1) throw std::domain_error("sharpness needs at least one step");
    std::vector<BoundInput> grid;
    for (int i = 0; i < opt.steps; ++i) {
        const double t = opt.steps == 1
                             ? opt.t_min
                             : opt.t_min + (opt.t_max - opt.t_min) * i / (opt.steps - 1);
        grid.emplace_back(t, opt.alpha, opt.beta, opt.dim);
    }
    const std::vector<SharpnessRow> rows =
        sharpness_report(grid, opt.dim, opt.restarts, opt.seed);

    std::ostringstream csv;
    csv << "T,alpha,beta,bound,best_entropy,rel_gap,distance_residual,attained\n";
    for (const SharpnessRow& row : rows) {
        csv << format_real(row.t) << "," << format_real(row.alpha) << ","
            << format_real(row.beta) << "," << format_real(row.bound) << ","
            << format_real(row.best_entropy) << "," << format_real(row.rel_gap) << ","
            << format_real(row.distance_residual) << "," << (row.attained ? "yes" : "no")
            << "\n";
    }
    if (opt.out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw MatrixParseError("cannot open output file: " + opt.out_path);
        out << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy distance measures and sharp trace-distance bounds for quantum states"};
    app.require_subcommand(1);

    ComputeOptions compute;
    CLI::App* cmd_compute = app.add_subcommand(
        "compute", "entropies, trace distance and minimal eigenvalues of a state pair");
    cmd_compute->add_option("rho", compute.rho_path, "matrix JSON file")->required();
    cmd_compute->add_option("sigma", compute.sigma_path, "matrix JSON file")->required();
    cmd_compute->add_option("--states", compute.states, "density|positive")
        ->check(CLI::IsMember({"density", "positive"}));
    cmd_compute->add_option("--cd", compute.c_d, "regularisation constant (default 1/log 2)");

    BoundOptions bound;
    CLI::App* cmd_bound = app.add_subcommand("bound", "evaluate a bound at scalar inputs");
    cmd_bound->add_option("--which", bound.which, "prop|theorem|cor1|cor2")
        ->required()
        ->check(CLI::IsMember({"prop", "theorem", "cor1", "cor2"}));
    cmd_bound->add_option("--T", bound.t, "half trace-norm distance")->required();
    cmd_bound->add_option("--alpha", bound.alpha, "minimal eigenvalue of the first state");
    cmd_bound->add_option("--beta", bound.beta, "minimal eigenvalue of the second state");
    cmd_bound->add_option("--cd", bound.c_d, "regularisation constant (cor2 only)");

    SweepOptions sweep;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "bound values over a range of T, as CSV");
    cmd_sweep->add_option("--which", sweep.which, "prop|theorem|cor1|cor2")
        ->required()
        ->check(CLI::IsMember({"prop", "theorem", "cor1", "cor2"}));
    cmd_sweep->add_option("--alpha", sweep.alpha);
    cmd_sweep->add_option("--beta", sweep.beta);
    cmd_sweep->add_option("--t-min", sweep.t_min);
    cmd_sweep->add_option("--t-max", sweep.t_max);
    cmd_sweep->add_option("--steps", sweep.steps, "number of rows");
    cmd_sweep->add_option("--cd", sweep.c_d);
    cmd_sweep->add_option("--out", sweep.out_path, "CSV file (stdout when omitted)");

    FuzzOptions fuzz;
    CLI::App* cmd_fuzz = app.add_subcommand(
        "fuzz", "random density-matrix pairs against a bound; slack CSV sorted ascending");
    cmd_fuzz->add_option("--dim", fuzz.dim)->required();
    cmd_fuzz->add_option("--samples", fuzz.samples)->required();
    cmd_fuzz->add_option("--seed", fuzz.seed);
    cmd_fuzz->add_option("--which", fuzz.which, "theorem|cor1|cor2q|cor2q2");
    cmd_fuzz->add_option("--out", fuzz.out_path, "CSV file (stdout when omitted)");
    cmd_fuzz->add_option("--threads", fuzz.threads, "cap on worker threads");

    VerifyOptions verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the property suites");
    cmd_verify->add_option("--suite", verify.suite, "integrals|lemmas|bounds|all")
        ->check(CLI::IsMember({"integrals", "lemmas", "bounds", "all"}));
    cmd_verify->add_option("--seed", verify.seed);

    SharpnessOptions sharp;
    CLI::App* cmd_sharp = app.add_subcommand(
        "sharpness", "optimizer-attained entropy against the bound over a T grid");
    cmd_sharp->add_option("--d", sharp.dim, "state dimension (>= 3)");
    cmd_sharp->add_option("--alpha", sharp.alpha)->required();
    cmd_sharp->add_option("--beta", sharp.beta)->required();
    cmd_sharp->add_option("--t-min", sharp.t_min)->required();
    cmd_sharp->add_option("--t-max", sharp.t_max);
    cmd_sharp->add_option("--steps", sharp.steps);
    cmd_sharp->add_option("--restarts", sharp.restarts);
    cmd_sharp->add_option("--seed", sharp.seed);
    cmd_sharp->add_option("--out", sharp.out_path, "CSV file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_compute->parsed()) return run_compute(compute);
        if (cmd_bound->parsed()) return run_bound(bound, cmd_bound->count("--beta") > 0);
        if (cmd_sweep->parsed()) return run_sweep(sweep, cmd_sweep->count("--beta") > 0);
        if (cmd_fuzz->parsed()) return run_fuzz(fuzz);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_sharp->parsed()) return run_sharpness(sharp);
    } catch (const MatrixParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInfeasible;
    }
    return kExitUsage;
}
