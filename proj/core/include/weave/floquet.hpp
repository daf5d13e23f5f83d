#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "weave/dynamics.hpp"
#include "weave/effective.hpp"
#include "weave/model.hpp"

namespace weave {

/// One piecewise-constant control window: only the listed coupler edges are
/// active (at their device strengths) for `duration_us`.
struct ScheduleSegment {
    double duration_us = 0.0;
    std::vector<std::pair<int, int>> edges;
};

/// One period of periodic edge weaving. The canonical two-node bridge with
/// coupling g uses segment durations t1 = 1/(4g) (the paper's pi/2g with
/// angular g is 1/(4g) in linear MHz), so each active edge performs a full
/// excitation swap per segment.
struct FloquetSchedule {
    std::vector<ScheduleSegment> segments;

    double period_us() const;
    bool empty() const { return segments.empty(); }
    void validate(const DeviceLattice& device) const;
};

FloquetSchedule load_schedule(const std::string& path);
void save_schedule(const FloquetSchedule& schedule, const std::string& path);
std::string schedule_to_json_string(const FloquetSchedule& schedule);
FloquetSchedule schedule_from_json_string(const std::string& text);

/// Ordered product of segment exponentials over one period, in the
/// single-excitation basis of the device (qubit order).
Eigen::MatrixXcd period_unitary(const DeviceLattice& device, const FloquetSchedule& schedule);

/// Effective two-site model of the canonical four-qubit bridge with t1 =
/// 1/(4g) and middle window t2: coupling g~ = g * (g_ang t2)/(g_ang t2 + pi).
EffectiveModel pew_effective(double g_mhz, double t2_us, double omega_mhz = 0.0,
                             const std::array<std::string, 2>& labels = {"u", "v"});

/// Bridge coupling with n_connectors in the chain: g / (N_c + 1).
double pew_scaling(double g_mhz, int n_connectors);

/// Canonical chain-bridge schedule: N_c+1 segments of duration 1/(4g) on the
/// chain 0..N_c+1. Even N_c uses the palindromic pattern (exact stroboscopic
/// bridge, identity on connectors); odd N_c marches the excitation across
/// one edge per segment (end-to-end transfer completes each period).
FloquetSchedule pew_chain_schedule(int n_connectors, double g_mhz);

/// 1 x (N_c+2) chain device for bridge studies.
DeviceLattice pew_chain_device(int n_connectors, double omega_mhz, double alpha_mhz,
                               double g_mhz, int levels = 3, double g_max_mhz = 0.0);

/// Populations sampled at integer multiples of the period only.
struct StroboscopicResult {
    Eigen::VectorXd times_us;
    Eigen::MatrixXd populations;
    std::vector<std::string> labels;
    double period_us = 0.0;
};

struct PewSimulation {
    StroboscopicResult strobo;
    EvolutionResult continuous;  ///< sub-sampled inside segments when requested
    ErrorSeries boundary_error;  ///< vs the supplied effective model, at boundaries
    bool has_error = false;
};

/// Piecewise-constant evolution (segment-wise spectral propagation) of the
/// full device Hamiltonian for `cycles` periods. When `effective` is given,
/// the stroboscopic populations are compared against it at period boundaries;
/// `effective_map` pairs (effective label, device single-excitation label).
PewSimulation simulate_pew(const DeviceLattice& device, const FloquetSchedule& schedule,
                           const std::string& initial, int cycles,
                           int substeps_per_segment = 0,
                           const EffectiveModel* effective = nullptr,
                           const std::vector<std::pair<std::string, std::string>>& effective_map = {});

/// Effective bridge coupling realized by a stroboscopic record: from the
/// first boundary where the target population completes the transfer,
/// g~ = 1/(4 t*). Throws NumericError when no transfer completes.
double measured_pew_coupling_mhz(const StroboscopicResult& strobo, const std::string& target_label,
                                 double threshold = 0.999);

} // namespace weave
