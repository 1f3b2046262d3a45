#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg::cli {

// Command-line misuse (unknown family, malformed flag value); exit code 1
// rather than the domain-error code.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Csv, Json };

struct CommonOptions {
    OutputFormat format = OutputFormat::Csv;
    std::string output_path; // empty = stdout
    double tail_tol = 1e-12;
};

struct StateOptions {
    CommonOptions common;
    std::string family;
    double j = 0.5;
    double k = 0.5;
    int m_big = 1;
    std::string gamma = "0";
    std::string eta = "0";
    std::string alpha = "0";
    std::optional<double> theta; // angle parameterization, su(2)
    std::optional<double> phi;
    std::optional<double> xi_r; // angle parameterization, su(1,1)
    std::optional<double> xi_theta;
    std::vector<double> phase_poly; // theta(x) = sum_i c_i x^i
};

struct EntangleOptions {
    CommonOptions common;
    std::string family;
    double j = 0.5;
    double k = 0.5;
    int m_big = 1;
    std::string gamma1 = "0", gamma2 = "0";
    std::string eta1 = "0", eta2 = "0";
};

struct MeasureOptions {
    CommonOptions common;
    std::string family;
    double j = 0.5;
    double k = 0.5;
    std::string gamma0 = "0";
    std::string eta0 = "0";
};

struct SweepOptions {
    CommonOptions common;
    std::string family;
    std::string param; // gamma0 | eta0 | j | k
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;
    double j = 0.5;
    double k = 0.5;
    std::string gamma0 = "1";
    std::string eta0 = "0.5";
    int threads = 0; // 0 = hardware default
};

struct EvolveOptions {
    CommonOptions common;
    std::string hamiltonian; // rotator | kerr | cross-number | kerr-cross
    std::string family = "perelomov";
    double j = 1.0;
    double k = 0.5;
    int m_big = 4;
    std::string gamma = "0";
    std::string eta = "0";
    std::string gamma1 = "0", gamma2 = "0";
    std::string eta1 = "0", eta2 = "0";
    double omega = 0.0;
    double lambda = 1.0;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0;
    double chi = 0.0;
    double t = 0.0;
    std::string assert_identity; // empty = no check
};

int run_state(const StateOptions& opt);
int run_entangle(const EntangleOptions& opt);
int run_measure(const MeasureOptions& opt);
int run_sweep(const SweepOptions& opt);
int run_evolve(const EvolveOptions& opt);
int run_selftest();

// exit codes shared by main and the command bodies
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitRank = 3;
inline constexpr int kExitGate = 4;

} // namespace liealg::cli
