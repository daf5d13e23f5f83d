#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "weave/effective.hpp"
#include "weave/hamiltonian.hpp"
#include "weave/model.hpp"

namespace weave {

enum class ModelTag { Full, Effective, Ctqw };

/// Populations |<b|psi(t)>|^2 on a time grid, one column per basis state.
struct EvolutionResult {
    Eigen::VectorXd times_us;
    Eigen::MatrixXd populations; // times x basis
    std::vector<std::string> labels;
    std::string initial_label;
    ModelTag tag = ModelTag::Full;

    int column_of(const std::string& label) const;
};

/// Evolve |initial> under H by spectral decomposition; exact up to roundoff,
/// no step-size error. Times in us (or dimensionless if H is).
EvolutionResult evolve(const HamiltonianMatrix& h, const std::string& initial,
                       const Eigen::VectorXd& times_us);

/// CTQW transfer probability P(from,to;t) = |<to| exp(-iAt) |from>|^2.
/// Dimensionless time by default; with a walk speed J the generator is
/// 2 pi J A and t is in us.
double ctqw_probability(const TargetGraph& graph, int from, int to, double t,
                        std::optional<double> speed_j_mhz = std::nullopt);

/// Same walk on a weighted Hermitian generator (may carry a diagonal);
/// used to cross-check single-excitation device dynamics.
double ctqw_probability(const Eigen::MatrixXd& weights, int from, int to, double t,
                        std::optional<double> speed_j_mhz = std::nullopt);

/// Full CTQW population record over a grid of times.
EvolutionResult ctqw_evolution(const TargetGraph& graph, int from, const Eigen::VectorXd& times,
                               std::optional<double> speed_j_mhz = std::nullopt);

/// Population error E_k(t) = |p_full,k(t) - p_eff,k(t)| per tracked state.
struct ErrorSeries {
    Eigen::VectorXd times_us;
    Eigen::MatrixXd errors; // times x tracked states
    std::vector<std::string> labels;

    double max_error() const;
};

/// `label_map` pairs (effective-basis label, full-model label); both results
/// must share the time grid.
ErrorSeries population_error(const EvolutionResult& full, const EvolutionResult& eff,
                             const std::vector<std::pair<std::string, std::string>>& label_map);

/// Per-edge deviation of |g~| from the imposed walk speed J.
struct WalkSpeedReport {
    struct Edge {
        std::string a, b;
        double g_tilde_mhz = 0.0;
        double relative_deviation = 0.0;
        bool flagged = false;
    };
    std::vector<Edge> edges;
    double tolerance = 0.0;

    bool any_flagged() const;
    double max_deviation() const;
};

WalkSpeedReport compare_walkspeed(const EffectiveModel& model, WalkSpeed j,
                                  double tolerance = 0.05);

} // namespace weave
