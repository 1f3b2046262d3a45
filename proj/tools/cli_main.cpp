#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"
#include "liealg/errors.hpp"
#include "liealg/textio.hpp"

namespace {

using namespace liealg::cli;

// Expand `--config path` (or --config=path) into `--key=value` tokens placed
// directly after the subcommand, so explicit flags override the file.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args;
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        const std::string tok = argv[i];
        if (tok == "--config") {
            if (i + 1 >= argc) throw usage_error("--config requires a file path");
            config_path = argv[++i];
        } else if (tok.rfind("--config=", 0) == 0) {
            config_path = tok.substr(9);
        } else {
            args.push_back(tok);
        }
    }
    if (!config_path.empty()) {
        if (args.empty()) throw usage_error("--config requires a subcommand");
        const auto entries = liealg::parse_config_file(config_path);
        std::vector<std::string> expanded;
        expanded.push_back(args.front());
        for (const auto& [key, value] : entries) {
            expanded.push_back("--" + key + "=" + value);
        }
        expanded.insert(expanded.end(), args.begin() + 1, args.end());
        return expanded;
    }
    return args;
}

// Every option may appear twice (config file then command line); last wins.
template <typename... Args>
CLI::Option* opt(CLI::App* sub, Args&&... rest) {
    return sub->add_option(std::forward<Args>(rest)...)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void add_common(CLI::App* sub, CommonOptions& common) {
    opt(sub, "--format", common.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                                {"json", OutputFormat::Json}}));
    opt(sub, "--output", common.output_path,
        "write the table to this file instead of stdout");
    opt(sub, "--tail-tol", common.tail_tol,
        "truncation tolerance for infinite-basis states, in (0, 1e-6]");
}

void validate_common(const CommonOptions& common) {
    if (!(common.tail_tol > 0.0) || common.tail_tol > 1e-6) {
        throw usage_error("tail tolerance must lie in (0, 1e-6], got " +
                          liealg::format_double(common.tail_tol));
    }
}

int dispatch(CLI::App& app, const StateOptions& state_opt, const EntangleOptions& ent_opt,
             const MeasureOptions& meas_opt, const SweepOptions& sweep_opt,
             const EvolveOptions& evolve_opt) {
    if (app.got_subcommand("state")) {
        validate_common(state_opt.common);
        return run_state(state_opt);
    }
    if (app.got_subcommand("entangle")) {
        validate_common(ent_opt.common);
        return run_entangle(ent_opt);
    }
    if (app.got_subcommand("measure")) {
        validate_common(meas_opt.common);
        return run_measure(meas_opt);
    }
    if (app.got_subcommand("sweep")) {
        validate_common(sweep_opt.common);
        return run_sweep(sweep_opt);
    }
    if (app.got_subcommand("evolve")) {
        validate_common(evolve_opt.common);
        return run_evolve(evolve_opt);
    }
    if (app.got_subcommand("selftest")) {
        return run_selftest();
    }
    throw usage_error("missing subcommand (see --help)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "liealg: su(2)/su(1,1) coherent states, parity and entangled variants,\n"
        "number-diagonal evolution, and entanglement measures.\n"
        "A key-value config file can seed any flag via --config FILE\n"
        "(lines `key = value`, `#` comments); explicit flags win.\n"
        "LIEALG_TAIL_TOL overrides the default truncation tolerance."};
    app.require_subcommand(0, 1);

    StateOptions state_opt;
    EntangleOptions ent_opt;
    MeasureOptions meas_opt;
    SweepOptions sweep_opt;
    EvolveOptions evolve_opt;

    if (const char* env = std::getenv("LIEALG_TAIL_TOL")) {
        try {
            const double v = std::stod(env);
            state_opt.common.tail_tol = v;
            ent_opt.common.tail_tol = v;
            meas_opt.common.tail_tol = v;
            sweep_opt.common.tail_tol = v;
            evolve_opt.common.tail_tol = v;
        } catch (const std::exception&) {
            std::cerr << "invalid LIEALG_TAIL_TOL value: " << env << "\n";
            return kExitUsage;
        }
    }

    CLI::App* state = app.add_subcommand("state", "build a single-particle state");
    add_common(state, state_opt.common);
    opt(state, "--family", state_opt.family,
        "su2 | su2-parity | nonlinear-su2 | perelomov | perelomov-parity | "
        "nonlinear-perelomov | bg | bg-parity | nonlinear-bg | binomial | "
        "negative-binomial | squeezed-vacuum | squeezed-first | coherent")
        ->required();
    opt(state, "--j", state_opt.j, "su(2) angular momentum (half-integer)");
    opt(state, "--k", state_opt.k, "su(1,1) Bargmann index (k > 0)");
    opt(state, "--M", state_opt.m_big, "binomial / negative-binomial order");
    opt(state, "--gamma", state_opt.gamma, "su(2) parameter, complex a+bi");
    opt(state, "--eta", state_opt.eta, "su(1,1)/Fock parameter, complex a+bi");
    opt(state, "--alpha", state_opt.alpha, "oscillator amplitude, complex a+bi");
    opt(state, "--theta", state_opt.theta, "polar angle; with --phi sets gamma");
    opt(state, "--phi", state_opt.phi, "azimuth for --theta");
    opt(state, "--xi-r", state_opt.xi_r, "squeeze modulus; with --xi-theta sets eta");
    opt(state, "--xi-theta", state_opt.xi_theta, "squeeze angle for --xi-r");
    opt(state, "--phase-poly", state_opt.phase_poly,
        "polynomial phase coefficients c0,c1,... for the nonlinear families")
        ->delimiter(',');

    CLI::App* entangle = app.add_subcommand("entangle", "build a two-particle state");
    add_common(entangle, ent_opt.common);
    opt(entangle, "--family", ent_opt.family,
        "su2-parity | perelomov | bg | binomial | negative-binomial | "
        "squeezed-vacuum | squeezed-first")
        ->required();
    opt(entangle, "--j", ent_opt.j, "su(2) angular momentum");
    opt(entangle, "--k", ent_opt.k, "su(1,1) Bargmann index");
    opt(entangle, "--M", ent_opt.m_big, "binomial / negative-binomial order");
    opt(entangle, "--gamma1", ent_opt.gamma1, "slot-1 su(2) parameter");
    opt(entangle, "--gamma2", ent_opt.gamma2, "slot-2 su(2) parameter");
    opt(entangle, "--eta1", ent_opt.eta1, "slot-1 su(1,1)/Fock parameter");
    opt(entangle, "--eta2", ent_opt.eta2, "slot-2 su(1,1)/Fock parameter");

    CLI::App* measure = app.add_subcommand(
        "measure", "entanglement measures of a symmetric two-particle parity state");
    add_common(measure, meas_opt.common);
    opt(measure, "--family", meas_opt.family, "su2-parity | perelomov-parity")->required();
    opt(measure, "--j", meas_opt.j, "su(2) angular momentum");
    opt(measure, "--k", meas_opt.k, "su(1,1) Bargmann index");
    opt(measure, "--gamma0", meas_opt.gamma0, "symmetric su(2) parameter");
    opt(measure, "--eta0", meas_opt.eta0, "symmetric su(1,1) parameter");

    CLI::App* sweep =
        app.add_subcommand("sweep", "tabulate measures over a parameter grid");
    add_common(sweep, sweep_opt.common);
    opt(sweep, "--family", sweep_opt.family, "su2-parity | perelomov-parity")->required();
    opt(sweep, "--param", sweep_opt.param, "gamma0 | eta0 | j | k")->required();
    opt(sweep, "--start", sweep_opt.start, "first grid value")->required();
    opt(sweep, "--stop", sweep_opt.stop, "last grid value");
    opt(sweep, "--steps", sweep_opt.steps, "number of grid points (>= 1)")->required();
    opt(sweep, "--j", sweep_opt.j, "fixed su(2) angular momentum");
    opt(sweep, "--k", sweep_opt.k, "fixed su(1,1) Bargmann index");
    opt(sweep, "--gamma0", sweep_opt.gamma0, "fixed su(2) parameter for j/k sweeps");
    opt(sweep, "--eta0", sweep_opt.eta0, "fixed su(1,1) parameter for j/k sweeps");
    opt(sweep, "--threads", sweep_opt.threads, "worker threads (0 = hardware)");

    CLI::App* evolve = app.add_subcommand(
        "evolve", "evolve a state under a number-diagonal Hamiltonian");
    add_common(evolve, evolve_opt.common);
    opt(evolve, "--hamiltonian", evolve_opt.hamiltonian,
        "rotator | kerr | cross-number | kerr-cross")
        ->required();
    opt(evolve, "--family", evolve_opt.family,
        "initial-state family: su2 | perelomov | bg | binomial | negative-binomial");
    opt(evolve, "--j", evolve_opt.j, "su(2) angular momentum");
    opt(evolve, "--k", evolve_opt.k, "su(1,1) Bargmann index");
    opt(evolve, "--M", evolve_opt.m_big, "binomial / negative-binomial order");
    opt(evolve, "--gamma", evolve_opt.gamma, "initial su(2) parameter");
    opt(evolve, "--eta", evolve_opt.eta, "initial su(1,1) parameter");
    opt(evolve, "--gamma1", evolve_opt.gamma1, "slot-1 su(2) parameter");
    opt(evolve, "--gamma2", evolve_opt.gamma2, "slot-2 su(2) parameter");
    opt(evolve, "--eta1", evolve_opt.eta1, "slot-1 su(1,1)/Fock parameter");
    opt(evolve, "--eta2", evolve_opt.eta2, "slot-2 su(1,1)/Fock parameter");
    opt(evolve, "--omega", evolve_opt.omega, "linear precession frequency");
    opt(evolve, "--lambda", evolve_opt.lambda, "nonlinear strength");
    opt(evolve, "--c1", evolve_opt.c1, "cross-number coefficient of N1^2");
    opt(evolve, "--c2", evolve_opt.c2, "cross-number coefficient of N2^2");
    opt(evolve, "--c3", evolve_opt.c3, "cross-number coefficient of N1 N2");
    opt(evolve, "--chi", evolve_opt.chi, "cross-Kerr phase");
    opt(evolve, "--t", evolve_opt.t, "evolution time");
    opt(evolve, "--assert-identity", evolve_opt.assert_identity,
        "parity | entangled-su2 | entangled-perelomov | entangled-bg | "
        "entangled-binomial | entangled-negative-binomial | cat-su2 | cat-su11");

    app.add_subcommand("selftest", "run the algebra and oracle invariant suites");

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
        return dispatch(app, state_opt, ent_opt, meas_opt, sweep_opt, evolve_opt);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const liealg::rank_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRank;
    } catch (const liealg::identity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
