#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "liealg/dynamics.hpp"
#include "liealg/errors.hpp"
#include "liealg/measures.hpp"
#include "liealg/textio.hpp"

namespace liealg::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const cxd kI{0.0, 1.0};
using json = nlohmann::ordered_json;

// One emitted table; integer columns are kept as longs so CSV prints them
// without a decimal point.
struct Cell {
    bool integral = false;
    long long ivalue = 0;
    double dvalue = 0.0;

    static Cell integer(long long v) { return {true, v, 0.0}; }
    static Cell number(double v) { return {false, 0, v}; }

    std::string text() const {
        return integral ? std::to_string(ivalue) : format_double(dvalue);
    }
    json as_json() const { return integral ? json(ivalue) : json(dvalue); }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void emit_csv(const Table& table, std::ostream& out) {
    for (size_t i = 0; i < table.columns.size(); ++i) {
        out << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out << row[i].text() << (i + 1 < row.size() ? "," : "");
        }
        out << "\n";
    }
}

// Single object with one array per column (records), or a plain object when
// the table has exactly one row, or an array of row objects for sweeps.
enum class JsonShape { ObjectOfArrays, SingleObject, ArrayOfObjects };

void emit_json(const Table& table, JsonShape shape, std::ostream& out) {
    json doc;
    switch (shape) {
    case JsonShape::ObjectOfArrays:
        for (size_t c = 0; c < table.columns.size(); ++c) {
            json arr = json::array();
            for (const auto& row : table.rows) arr.push_back(row[c].as_json());
            doc[table.columns[c]] = std::move(arr);
        }
        break;
    case JsonShape::SingleObject:
        for (size_t c = 0; c < table.columns.size(); ++c) {
            doc[table.columns[c]] = table.rows.at(0)[c].as_json();
        }
        break;
    case JsonShape::ArrayOfObjects:
        doc = json::array();
        for (const auto& row : table.rows) {
            json obj;
            for (size_t c = 0; c < table.columns.size(); ++c) {
                obj[table.columns[c]] = row[c].as_json();
            }
            doc.push_back(std::move(obj));
        }
        break;
    }
    out << doc.dump() << "\n";
}

void emit(const Table& table, const CommonOptions& common, JsonShape shape) {
    std::ostringstream buffer;
    if (common.format == OutputFormat::Csv) {
        emit_csv(table, buffer);
    } else {
        emit_json(table, shape, buffer);
    }
    if (common.output_path.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(common.output_path, std::ios::binary);
        if (!file) {
            throw std::invalid_argument("cannot open output file: " + common.output_path);
        }
        file << buffer.str();
    }
}

void check_probability_sum(double sum) {
    if (std::abs(sum - 1.0) > 1e-10) {
        throw identity_error("emitted probabilities sum to " + format_double(sum) +
                             ", expected 1 within 1e-10");
    }
}

Table state_table(const StateVector& s) {
    Table t;
    t.columns = {"n", "re", "im", "prob"};
    double sum = 0.0;
    for (int n = 0; n < s.dim(); ++n) {
        const cxd a = s.amplitude(n);
        sum += std::norm(a);
        t.rows.push_back({Cell::integer(n), Cell::number(a.real()), Cell::number(a.imag()),
                          Cell::number(std::norm(a))});
    }
    check_probability_sum(sum);
    return t;
}

Table bipartite_table(const BipartiteState& s) {
    Table t;
    t.columns = {"n1", "n2", "re", "im", "prob"};
    double sum = 0.0;
    for (int n1 = 0; n1 < s.dim1(); ++n1) {
        for (int n2 = 0; n2 < s.dim2(); ++n2) {
            const cxd a = s.coeffs()(n1, n2);
            sum += std::norm(a);
            t.rows.push_back({Cell::integer(n1), Cell::integer(n2), Cell::number(a.real()),
                              Cell::number(a.imag()), Cell::number(std::norm(a))});
        }
    }
    check_probability_sum(sum);
    return t;
}

cxd as_complex(const std::string& text, const char* flag) {
    try {
        return parse_complex(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("bad value for ") + flag + ": " + e.what());
    }
}

PhaseFn poly_phase(const std::vector<double>& coeffs) {
    return [coeffs](int n) {
        double acc = 0.0;
        double x = 1.0;
        for (double c : coeffs) {
            acc += c * x;
            x *= n;
        }
        return acc;
    };
}

} // namespace

int run_state(const StateOptions& opt) {
    cxd gamma = as_complex(opt.gamma, "--gamma");
    cxd eta = as_complex(opt.eta, "--eta");
    const cxd alpha = as_complex(opt.alpha, "--alpha");
    if (opt.theta.has_value() || opt.phi.has_value()) {
        gamma = su2_param(opt.theta.value_or(0.0), opt.phi.value_or(0.0));
    }
    if (opt.xi_r.has_value() || opt.xi_theta.has_value()) {
        eta = su11_param(opt.xi_r.value_or(0.0), opt.xi_theta.value_or(0.0));
    }
    const PhaseFn phase =
        opt.phase_poly.empty() ? PhaseFn([](int) { return 0.0; }) : poly_phase(opt.phase_poly);
    const double tt = opt.common.tail_tol;

    StateVector s = [&]() -> StateVector {
        const std::string& f = opt.family;
        if (f == "su2") return su2_coherent(opt.j, gamma);
        if (f == "su2-parity") return su2_parity_coherent(opt.j, gamma);
        if (f == "nonlinear-su2") return nonlinear_su2(opt.j, gamma, phase);
        if (f == "perelomov") return perelomov(opt.k, eta, tt);
        if (f == "perelomov-parity") return perelomov_parity(opt.k, eta, tt);
        if (f == "nonlinear-perelomov") return nonlinear_perelomov(opt.k, eta, phase, tt);
        if (f == "bg") return barut_girardello(opt.k, eta, tt);
        if (f == "bg-parity") return bg_parity(opt.k, eta, tt);
        if (f == "nonlinear-bg") return nonlinear_bg(opt.k, eta, phase, tt);
        if (f == "binomial") return binomial_state(opt.m_big, eta);
        if (f == "negative-binomial") return negative_binomial_state(opt.m_big, eta, tt);
        if (f == "squeezed-vacuum") return squeezed_vacuum(eta, tt);
        if (f == "squeezed-first") return squeezed_first(eta, tt);
        if (f == "coherent") return ho_coherent(alpha, tt);
        throw usage_error("unknown state family: " + f);
    }();

    emit(state_table(s), opt.common, JsonShape::ObjectOfArrays);
    return kExitOk;
}

int run_entangle(const EntangleOptions& opt) {
    const bool su2 = opt.family == "su2-parity";
    const cxd p1 = su2 ? as_complex(opt.gamma1, "--gamma1") : as_complex(opt.eta1, "--eta1");
    const cxd p2 = su2 ? as_complex(opt.gamma2, "--gamma2") : as_complex(opt.eta2, "--eta2");
    const double tt = opt.common.tail_tol;

    BipartiteState s = [&]() -> BipartiteState {
        const std::string& f = opt.family;
        if (f == "su2-parity") return entangled_su2_parity(opt.j, p1, p2);
        if (f == "perelomov") return entangled_perelomov(opt.k, p1, p2, tt);
        if (f == "bg") return entangled_barut_girardello(opt.k, p1, p2, tt);
        if (f == "binomial") return entangled_binomial(opt.m_big, p1, p2);
        if (f == "negative-binomial")
            return entangled_negative_binomial(opt.m_big, p1, p2, tt);
        if (f == "squeezed-vacuum")
            return entangled_squeezed(p1, p2, SqueezedSector::Vacuum, tt);
        if (f == "squeezed-first")
            return entangled_squeezed(p1, p2, SqueezedSector::First, tt);
        throw usage_error("unknown entangled family: " + f);
    }();

    emit(bipartite_table(s), opt.common, JsonShape::ObjectOfArrays);
    return kExitOk;
}

namespace {

struct MeasureRecord {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double bell_closed = 0.0;
    double bell_numeric = 0.0;
    double entropy_s1 = 0.0;
    double index_ic = 0.0;
};

MeasureRecord measure_point(const std::string& family, double j, double k, cxd value,
                            double tail_tol) {
    MeasureRecord rec;
    BipartiteState psi = [&]() -> BipartiteState {
        if (family == "su2-parity") {
            rec.bell_closed = bell_closed_su2(j, value);
            return entangled_su2_parity(j, value, value);
        }
        if (family == "perelomov-parity") {
            rec.bell_closed = bell_closed_su11(k, value);
            return entangled_perelomov(k, value, value, tail_tol);
        }
        throw usage_error("unknown measure family: " + family +
                          " (su2-parity or perelomov-parity)");
    }();
    const MeasureReport rep = measure(psi);
    rec.lambda_plus = rep.lambda_plus;
    rec.lambda_minus = rep.lambda_minus;
    rec.bell_numeric = rep.bell;
    rec.entropy_s1 = rep.entropy_s1;
    rec.index_ic = rep.index_ic;
    return rec;
}

void check_bell_agreement(const MeasureRecord& rec, const std::string& where) {
    if (std::abs(rec.bell_numeric - rec.bell_closed) > 1e-10) {
        throw identity_error("closed-form and numeric Bell values disagree at " + where +
                             ": " + format_double(rec.bell_closed) + " vs " +
                             format_double(rec.bell_numeric));
    }
}

} // namespace

int run_measure(const MeasureOptions& opt) {
    const cxd value = opt.family == "su2-parity" ? as_complex(opt.gamma0, "--gamma0")
                                                 : as_complex(opt.eta0, "--eta0");
    const MeasureRecord rec =
        measure_point(opt.family, opt.j, opt.k, value, opt.common.tail_tol);
    check_bell_agreement(rec, "the requested point");

    Table t;
    t.columns = {"lambda_plus", "lambda_minus", "bell_numeric",
                 "bell_closed", "entropy_s1",   "index_ic"};
    t.rows.push_back({Cell::number(rec.lambda_plus), Cell::number(rec.lambda_minus),
                      Cell::number(rec.bell_numeric), Cell::number(rec.bell_closed),
                      Cell::number(rec.entropy_s1), Cell::number(rec.index_ic)});
    emit(t, opt.common, JsonShape::SingleObject);
    return kExitOk;
}

int run_sweep(const SweepOptions& opt) {
    if (opt.steps < 1) {
        throw usage_error("--steps must be at least 1");
    }
    std::vector<double> grid(opt.steps);
    for (int i = 0; i < opt.steps; ++i) {
        grid[i] = opt.steps == 1
                      ? opt.start
                      : opt.start + (opt.stop - opt.start) * i / (opt.steps - 1.0);
    }

    const cxd gamma0 = as_complex(opt.gamma0, "--gamma0");
    const cxd eta0 = as_complex(opt.eta0, "--eta0");
    auto point_inputs = [&](double v) {
        double j = opt.j, k = opt.k;
        cxd value = opt.family == "su2-parity" ? gamma0 : eta0;
        if (opt.param == "gamma0" || opt.param == "eta0") {
            value = v;
        } else if (opt.param == "j") {
            j = v;
        } else if (opt.param == "k") {
            k = v;
        } else {
            throw usage_error("unknown sweep parameter: " + opt.param);
        }
        return std::tuple<double, double, cxd>{j, k, value};
    };
    point_inputs(grid[0]); // validate the parameter name before spawning workers

    // grid points are independent; compute concurrently, emit in grid order
    std::vector<MeasureRecord> records(grid.size());
    std::vector<std::string> failures(grid.size());
    std::atomic<size_t> cursor{0};
    const unsigned hw = std::thread::hardware_concurrency();
    const size_t n_threads =
        std::min<size_t>(grid.size(),
                         opt.threads > 0 ? static_cast<size_t>(opt.threads)
                                         : std::max(1u, hw == 0 ? 1u : hw));
    auto worker = [&]() {
        for (size_t i = cursor.fetch_add(1); i < grid.size(); i = cursor.fetch_add(1)) {
            try {
                const auto [j, k, value] = point_inputs(grid[i]);
                records[i] = measure_point(opt.family, j, k, value, opt.common.tail_tol);
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (size_t i = 0; i < grid.size(); ++i) {
        if (!failures[i].empty()) {
            throw std::domain_error("sweep point " + opt.param + " = " +
                                    format_double(grid[i]) + " failed: " + failures[i]);
        }
        check_bell_agreement(records[i], opt.param + " = " + format_double(grid[i]));
    }

    Table t;
    t.columns = {"param",       "lambda_plus", "lambda_minus", "bell_closed",
                 "bell_numeric", "entropy",     "ic"};
    for (size_t i = 0; i < grid.size(); ++i) {
        const MeasureRecord& r = records[i];
        t.rows.push_back({Cell::number(grid[i]), Cell::number(r.lambda_plus),
                          Cell::number(r.lambda_minus), Cell::number(r.bell_closed),
                          Cell::number(r.bell_numeric), Cell::number(r.entropy_s1),
                          Cell::number(r.index_ic)});
    }
    emit(t, opt.common, JsonShape::ArrayOfObjects);
    return kExitOk;
}

namespace {

StateVector rotator_two_branch_target(double j, cxd gamma, double omega, double lambda,
                                      double t) {
    const long jint = std::lround(j);
    if (std::abs(j - jint) > 1e-9) {
        throw std::invalid_argument(
            "the rotator identity is only defined for integer j");
    }
    const cxd gbar = std::exp(kI * (omega * t)) * gamma;
    const double sign_j = jint % 2 == 0 ? 1.0 : -1.0;
    const Vector amps = std::exp(-kI * kPi / 4.0) / std::sqrt(2.0) *
                            su2_coherent(j, gbar).amplitudes() +
                        sign_j * std::exp(kI * kPi / 4.0) / std::sqrt(2.0) *
                            su2_coherent(j, -gbar).amplitudes();
    return StateVector(IrrepLabel::su2(j), amps);
}

StateVector kerr_two_branch_target(double k, cxd eta, bool perel, double omega,
                                   double lambda, int n_max) {
    const cxd ebar =
        std::exp(-kI * (kPi * (omega + (2.0 * k - 1.0) * lambda) / (2.0 * lambda))) * eta;
    auto make = [&](cxd e) {
        return perel ? perelomov_fixed(k, e, n_max) : barut_girardello_fixed(k, e, n_max);
    };
    const Vector amps =
        std::exp(-kI * kPi / 4.0) / std::sqrt(2.0) * make(ebar).amplitudes() +
        std::exp(kI * kPi / 4.0) / std::sqrt(2.0) * make(-ebar).amplitudes();
    return StateVector(IrrepLabel::su11(k), amps);
}

void gate_fidelity(const std::string& name, double fid) {
    std::cerr << "assert-identity " << name << ": fidelity = " << format_double(fid)
              << "\n";
    if (1.0 - fid > 1e-9) {
        throw identity_error("identity '" + name + "' failed: fidelity " +
                             format_double(fid) + " below 1 - 1e-9");
    }
}

void gate_deviation(const std::string& name, double dev) {
    std::cerr << "assert-identity " << name << ": max deviation = " << format_double(dev)
              << "\n";
    if (dev > 1e-9) {
        throw identity_error("identity '" + name + "' failed: deviation " +
                             format_double(dev) + " above 1e-9");
    }
}

} // namespace

int run_evolve(const EvolveOptions& opt) {
    const double tt = opt.common.tail_tol;
    const std::string& ham = opt.hamiltonian;
    const std::string& id = opt.assert_identity;
    const bool perel = opt.family != "bg";

    if (ham == "rotator") {
        const cxd gamma = as_complex(opt.gamma, "--gamma");
        const StateVector evolved = evolve(su2_coherent(opt.j, gamma),
                                           RotatorHamiltonian{opt.omega, opt.lambda, opt.j},
                                           opt.t);
        if (id == "parity") {
            const StateVector target =
                rotator_two_branch_target(opt.j, gamma, opt.omega, opt.lambda, opt.t);
            gate_fidelity(id, fidelity(evolved, target));
        } else if (!id.empty()) {
            throw usage_error("rotator supports --assert-identity parity only");
        }
        emit(state_table(evolved), opt.common, JsonShape::ObjectOfArrays);
        return kExitOk;
    }

    if (ham == "kerr") {
        const cxd eta = as_complex(opt.eta, "--eta");
        const StateVector initial = perel ? perelomov(opt.k, eta, tt)
                                          : barut_girardello(opt.k, eta, tt);
        const StateVector evolved =
            evolve(initial, KerrHamiltonian{opt.omega, opt.lambda, opt.k}, opt.t);
        if (id == "parity") {
            const StateVector target = kerr_two_branch_target(
                opt.k, eta, perel, opt.omega, opt.lambda, initial.dim() - 1);
            gate_fidelity(id, fidelity(evolved, target));
        } else if (!id.empty()) {
            throw usage_error("kerr supports --assert-identity parity only");
        }
        emit(state_table(evolved), opt.common, JsonShape::ObjectOfArrays);
        return kExitOk;
    }

    if (ham == "cross-number") {
        const bool su2 = opt.family == "su2";
        const cxd p1 = su2 ? as_complex(opt.gamma1, "--gamma1") : as_complex(opt.eta1, "--eta1");
        const cxd p2 = su2 ? as_complex(opt.gamma2, "--gamma2") : as_complex(opt.eta2, "--eta2");

        if (id == "entangled-su2") {
            double dev = 0.0;
            const BipartiteState out = generate_entangled_su2(opt.j, p1, p2, opt.c1, &dev);
            gate_fidelity(id, fidelity(out, entangled_su2_parity(opt.j, p1, p2)));
            emit(bipartite_table(out), opt.common, JsonShape::ObjectOfArrays);
            return kExitOk;
        }
        if (id == "entangled-perelomov" || id == "entangled-bg") {
            const Su11Family fam = id == "entangled-perelomov"
                                       ? Su11Family::Perelomov
                                       : Su11Family::BarutGirardello;
            double dev = 0.0;
            const BipartiteState out =
                generate_entangled_su11(opt.k, p1, p2, opt.c1, fam, tt, &dev);
            const BipartiteState target =
                fam == Su11Family::Perelomov
                    ? entangled_perelomov(opt.k, p1, p2, tt)
                    : entangled_barut_girardello(opt.k, p1, p2, tt);
            gate_fidelity(id, fidelity(out, target));
            emit(bipartite_table(out), opt.common, JsonShape::ObjectOfArrays);
            return kExitOk;
        }
        if (id == "cat-su2") {
            double dev = 0.0;
            const BipartiteState out = generate_cat_su2(opt.j, p1, p2, opt.c3, &dev);
            gate_deviation(id, dev);
            emit(bipartite_table(out), opt.common, JsonShape::ObjectOfArrays);
            return kExitOk;
        }
        if (id == "cat-su11") {
            double dev = 0.0;
            const BipartiteState out = generate_cat_su11(
                opt.k, p1, p2, opt.c3,
                perel ? Su11Family::Perelomov : Su11Family::BarutGirardello, tt, &dev);
            gate_deviation(id, dev);
            emit(bipartite_table(out), opt.common, JsonShape::ObjectOfArrays);
            return kExitOk;
        }
        if (!id.empty()) {
            throw usage_error("unknown identity for cross-number: " + id);
        }

        BipartiteState initial = [&]() {
            if (su2) {
                return product(su2_coherent(opt.j, p1), su2_coherent(opt.j, p2));
            }
            const double big = std::max(std::abs(p1), std::abs(p2));
            const int n_max =
                big == 0.0
                    ? 0
                    : (perel ? perelomov(opt.k, big, tt) : barut_girardello(opt.k, big, tt))
                              .dim() -
                          1;
            auto make = [&](cxd e) {
                return perel ? perelomov_fixed(opt.k, e, n_max)
                             : barut_girardello_fixed(opt.k, e, n_max);
            };
            return product(make(p1), make(p2));
        }();
        const BipartiteState evolved =
            evolve(initial, CrossNumberHamiltonian{opt.c1, opt.c2, opt.c3}, opt.t);
        emit(bipartite_table(evolved), opt.common, JsonShape::ObjectOfArrays);
        return kExitOk;
    }

    if (ham == "kerr-cross") {
        const cxd e1 = as_complex(opt.eta1, "--eta1");
        const cxd e2 = as_complex(opt.eta2, "--eta2");
        const bool binom = opt.family != "negative-binomial";
        BipartiteState initial = [&]() {
            if (binom) {
                return product(binomial_state(opt.m_big, e1), binomial_state(opt.m_big, e2));
            }
            const double big = std::max(std::abs(e1), std::abs(e2));
            const int dim =
                big == 0.0 ? 1 : negative_binomial_state(opt.m_big, big, tt).dim();
            auto make = [&](cxd e) {
                return embedded(negative_binomial_state(opt.m_big, e, tt), dim);
            };
            return product(make(e1), make(e2));
        }();
        const BipartiteState evolved = kerr_cross(initial, opt.chi);
        if (id == "entangled-binomial" || id == "entangled-negative-binomial") {
            const BipartiteState target =
                binom ? entangled_binomial(opt.m_big, e1, e2)
                      : entangled_negative_binomial(opt.m_big, e1, e2, tt);
            gate_fidelity(id, fidelity(evolved, target));
        } else if (!id.empty()) {
            throw usage_error("kerr-cross supports the entangled-binomial identities only");
        }
        emit(bipartite_table(evolved), opt.common, JsonShape::ObjectOfArrays);
        return kExitOk;
    }

    throw usage_error("unknown hamiltonian: " + ham);
}

} // namespace liealg::cli
