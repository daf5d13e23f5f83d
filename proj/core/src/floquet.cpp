#include "weave/floquet.hpp"

#include <cmath>
#include <fstream>

#include <Eigen/Dense>
#include <json.hpp>

#include "weave/hamiltonian.hpp"
#include "weave/units.hpp"

namespace weave {

using nlohmann::json;

double FloquetSchedule::period_us() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration_us;
    return t;
}

void FloquetSchedule::validate(const DeviceLattice& device) const {
    for (size_t i = 0; i < segments.size(); ++i) {
        const auto& s = segments[i];
        if (!(s.duration_us > 0))
            throw ValidationError("schedule: segment " + std::to_string(i) +
                                  " duration must be positive");
        for (auto [a, b] : s.edges)
            if (!device.coupler_between(a, b))
                throw ValidationError("schedule: segment " + std::to_string(i) +
                                      " references missing coupler (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
    }
}

FloquetSchedule schedule_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("schedule: ") + e.what());
    }
    if (!j.contains("version") || j.at("version").get<int>() != 1)
        throw ValidationError("schedule: missing or unsupported version");
    FloquetSchedule out;
    for (const auto& seg : j.at("segments")) {
        ScheduleSegment s;
        s.duration_us = seg.at("duration_us").get<double>();
        for (const auto& e : seg.at("edges"))
            s.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        out.segments.push_back(std::move(s));
    }
    return out;
}

std::string schedule_to_json_string(const FloquetSchedule& schedule) {
    json segs = json::array();
    for (const auto& s : schedule.segments) {
        json edges = json::array();
        for (auto [a, b] : s.edges) edges.push_back({a, b});
        segs.push_back({{"duration_us", s.duration_us}, {"edges", edges}});
    }
    return json{{"version", 1}, {"segments", segs}}.dump(2) + "\n";
}

FloquetSchedule load_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return schedule_from_json_string(text);
}

void save_schedule(const FloquetSchedule& schedule, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << schedule_to_json_string(schedule);
}

namespace {

/// Single-excitation Hamiltonian with only the segment's edges active.
Eigen::MatrixXcd segment_hamiltonian(const DeviceLattice& device, const ScheduleSegment& seg) {
    const int n = device.qubit_count();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) h(j, j) = to_angular(device.qubit(j).omega_mhz);
    for (auto [a, b] : seg.edges) {
        const CouplerSpec* c = device.coupler_between(a, b);
        if (!c)
            throw ValidationError("schedule references missing coupler (" + std::to_string(a) +
                                  "," + std::to_string(b) + ")");
        h(a, b) += to_angular(c->g_mhz);
        h(b, a) += to_angular(c->g_mhz);
    }
    return h;
}

Eigen::MatrixXcd segment_propagator(const Eigen::MatrixXcd& h, double dt) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericError("floquet: segment eigendecomposition failed");
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        phases[k] = std::polar(1.0, -solver.eigenvalues()[k] * dt);
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

} // namespace

Eigen::MatrixXcd period_unitary(const DeviceLattice& device, const FloquetSchedule& schedule) {
    schedule.validate(device);
    const int n = device.qubit_count();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
    for (const auto& seg : schedule.segments)
        u = segment_propagator(segment_hamiltonian(device, seg), seg.duration_us) * u;
    return u;
}

EffectiveModel pew_effective(double g_mhz, double t2_us, double omega_mhz,
                             const std::array<std::string, 2>& labels) {
    if (t2_us < 0) throw ValidationError("pew_effective: negative duration");
    constexpr double pi = two_pi / 2;
    const double theta = to_angular(g_mhz) * t2_us; // g t2 with angular g
    const double g_tilde = g_mhz * theta / (theta + pi);

    Eigen::MatrixXd m(2, 2);
    m << omega_mhz, g_tilde, g_tilde, omega_mhz;
    EffectiveModel out;
    out.basis_labels = {labels[0], labels[1]};
    out.h_eff_rad = (m * two_pi).cast<std::complex<double>>();
    out.method = EffectiveMethod::PewAnalytic;
    return out;
}

double pew_scaling(double g_mhz, int n_connectors) {
    if (n_connectors < 0) throw ValidationError("pew_scaling: connector count must be >= 0");
    return g_mhz / (n_connectors + 1);
}

FloquetSchedule pew_chain_schedule(int n_connectors, double g_mhz) {
    if (n_connectors < 1) throw ValidationError("pew_chain_schedule: need at least one connector");
    if (!(g_mhz > 0)) throw ValidationError("pew_chain_schedule: coupling must be positive");
    const double t1 = 1.0 / (4.0 * g_mhz);
    const int fragments = n_connectors + 1;

    FloquetSchedule out;
    out.segments.resize(fragments);
    for (auto& s : out.segments) s.duration_us = t1;

    if (n_connectors % 2 == 0) {
        // Palindromic march-in / cross / march-out: fragment k activates the
        // edge pair at distance min(k, last-k) from the two chain ends; the
        // middle fragment hits the single central edge where the two walkers
        // cross in one shared swap.
        for (int k = 0; k < fragments; ++k) {
            const int depth = std::min(k, fragments - 1 - k);
            const int mirror = n_connectors - depth;
            out.segments[k].edges.emplace_back(depth, depth + 1);
            if (mirror != depth) out.segments[k].edges.emplace_back(mirror, mirror + 1);
        }
    } else {
        // Sequential march: one edge per fragment.
        for (int k = 0; k < fragments; ++k) out.segments[k].edges.emplace_back(k, k + 1);
    }
    return out;
}

DeviceLattice pew_chain_device(int n_connectors, double omega_mhz, double alpha_mhz,
                               double g_mhz, int levels, double g_max_mhz) {
    const int n = n_connectors + 2;
    if (g_max_mhz <= 0) g_max_mhz = std::abs(g_mhz);
    std::vector<TransmonSpec> qubits;
    for (int i = 0; i < n; ++i) qubits.push_back({0, i, omega_mhz, alpha_mhz, levels});
    std::vector<CouplerSpec> couplers;
    for (int i = 0; i + 1 < n; ++i) couplers.push_back({i, i + 1, g_mhz, g_max_mhz});
    return DeviceLattice(1, n, std::move(qubits), std::move(couplers));
}

PewSimulation simulate_pew(const DeviceLattice& device, const FloquetSchedule& schedule,
                           const std::string& initial, int cycles, int substeps_per_segment,
                           const EffectiveModel* effective,
                           const std::vector<std::pair<std::string, std::string>>& effective_map) {
    schedule.validate(device);
    if (cycles < 1) throw ValidationError("simulate_pew: need at least one cycle");
    if (schedule.empty()) throw ValidationError("simulate_pew: empty schedule");

    // Work in the full product space so anharmonic leakage, if any, is
    // physical rather than assumed away; excitation conservation keeps the
    // cost at the single-excitation scale for our initial states.
    int levels = device.qubit(0).levels;
    for (const auto& q : device.qubits()) levels = std::min(levels, q.levels);
    const FockSpace space = FockSpace::full(device.qubit_count(), levels);

    std::vector<Eigen::MatrixXcd> propagators;
    std::vector<std::vector<Eigen::MatrixXcd>> sub_propagators(schedule.segments.size());
    for (size_t si = 0; si < schedule.segments.size(); ++si) {
        const auto& seg = schedule.segments[si];
        DeviceLattice frame = device;
        for (const auto& c : device.couplers()) frame = frame.with_coupler_g(c.a, c.b, 0.0);
        for (auto [a, b] : seg.edges)
            frame = frame.with_coupler_g(a, b, device.coupler_between(a, b)->g_mhz);
        const Eigen::MatrixXcd h = build_bhm(frame, space).matrix;
        propagators.push_back(segment_propagator(h, seg.duration_us));
        if (substeps_per_segment > 1)
            for (int k = 1; k < substeps_per_segment; ++k)
                sub_propagators[si].push_back(
                    segment_propagator(h, seg.duration_us * k / substeps_per_segment));
    }

    const int dim = space.dimension();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    psi[space.index_of_label(initial)] = 1.0;

    const double period = schedule.period_us();
    StroboscopicResult strobo;
    strobo.period_us = period;
    strobo.labels.reserve(dim);
    for (int i = 0; i < dim; ++i) strobo.labels.push_back(space.label(i));
    strobo.times_us.resize(cycles + 1);
    strobo.populations.resize(cycles + 1, dim);
    strobo.times_us[0] = 0.0;
    strobo.populations.row(0) = psi.cwiseAbs2().transpose();

    std::vector<double> cont_times;
    std::vector<Eigen::VectorXd> cont_pops;
    cont_times.push_back(0.0);
    cont_pops.push_back(psi.cwiseAbs2());

    for (int cycle = 0; cycle < cycles; ++cycle) {
        double t0 = cycle * period;
        for (size_t si = 0; si < schedule.segments.size(); ++si) {
            for (size_t k = 0; k < sub_propagators[si].size(); ++k) {
                const Eigen::VectorXcd mid = sub_propagators[si][k] * psi;
                cont_times.push_back(t0 + schedule.segments[si].duration_us * (k + 1) /
                                              substeps_per_segment);
                cont_pops.push_back(mid.cwiseAbs2());
            }
            psi = propagators[si] * psi;
            t0 += schedule.segments[si].duration_us;
            cont_times.push_back(t0);
            cont_pops.push_back(psi.cwiseAbs2());
        }
        strobo.times_us[cycle + 1] = (cycle + 1) * period;
        strobo.populations.row(cycle + 1) = psi.cwiseAbs2().transpose();
    }

    PewSimulation out;
    out.strobo = strobo;
    out.continuous.times_us =
        Eigen::Map<Eigen::VectorXd>(cont_times.data(), static_cast<Eigen::Index>(cont_times.size()));
    out.continuous.populations.resize(static_cast<Eigen::Index>(cont_pops.size()), dim);
    for (size_t i = 0; i < cont_pops.size(); ++i)
        out.continuous.populations.row(static_cast<Eigen::Index>(i)) = cont_pops[i].transpose();
    out.continuous.labels = strobo.labels;
    out.continuous.initial_label = initial;
    out.continuous.tag = ModelTag::Full;

    if (effective) {
        if (effective_map.empty())
            throw ValidationError("simulate_pew: effective model given without a label map");
        std::string eff_initial;
        for (const auto& [e, f] : effective_map)
            if (f == initial) eff_initial = e;
        if (eff_initial.empty())
            throw ValidationError("simulate_pew: initial state is not covered by the effective map");
        const EvolutionResult eff =
            evolve(to_hamiltonian(*effective), eff_initial, strobo.times_us);

        EvolutionResult full_at_boundaries;
        full_at_boundaries.times_us = strobo.times_us;
        full_at_boundaries.populations = strobo.populations;
        full_at_boundaries.labels = strobo.labels;
        full_at_boundaries.initial_label = initial;
        full_at_boundaries.tag = ModelTag::Full;
        out.boundary_error = population_error(full_at_boundaries, eff, effective_map);
        out.has_error = true;
    }
    return out;
}

double measured_pew_coupling_mhz(const StroboscopicResult& strobo, const std::string& target_label,
                                 double threshold) {
    int col = -1;
    for (size_t i = 0; i < strobo.labels.size(); ++i)
        if (strobo.labels[i] == target_label) col = static_cast<int>(i);
    if (col < 0) throw ValidationError("measured_pew_coupling: unknown label '" + target_label + "'");
    for (Eigen::Index k = 1; k < strobo.times_us.size(); ++k)
        if (strobo.populations(k, col) >= threshold)
            return 1.0 / (4.0 * strobo.times_us[k]);
    throw NumericError("measured_pew_coupling: no complete transfer within the simulated cycles");
}

} // namespace weave
