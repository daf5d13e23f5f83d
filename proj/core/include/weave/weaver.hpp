#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weave/floquet.hpp"
#include "weave/model.hpp"

namespace weave {

enum class BridgeKind { Static, Dynamic };

std::string to_string(BridgeKind k);

/// An engineered long-range edge: the target edge (vertex_u, vertex_v)
/// realized through the ordered connector path. Static bridges park the
/// connector `detuning_mhz` above the nodes; dynamic bridges toggle the path
/// couplers through the compiled schedule. `coupling_g_mhz` is the strength
/// applied on every coupler along the path.
struct Bridge {
    BridgeKind kind = BridgeKind::Static;
    int vertex_u = -1;
    int vertex_v = -1;
    std::vector<int> path;
    double detuning_mhz = 200.0;
    double coupling_g_mhz = 25.0;

    int connector_count() const { return static_cast<int>(path.size()); }
};

struct PlannerPolicy {
    std::uint64_t seed = 0;
    std::int64_t node_budget = 500000; ///< DFS expansions before giving up
    int max_static_connectors = 1;     ///< SEW bridges top out at one connector
    int max_dynamic_connectors = 7;    ///< PEW bridges top out at seven
    bool allow_dynamic = true;
    double bridge_coupling_mhz = 25.0;
    double static_detuning_mhz = 200.0;
};

/// A complete embedding: vertex->qubit assignment, direct edges, bridges,
/// the imposed walk speed, and the compiled global schedule (empty when the
/// plan has no dynamic bridges). Carries its target graph so plan files are
/// self-contained.
struct WeavePlan {
    TargetGraph graph;
    std::vector<int> vertex_to_qubit;
    std::vector<std::pair<int, int>> direct_edges; // vertex pairs, u < v
    std::vector<Bridge> bridges;
    WalkSpeed walk_speed;
    FloquetSchedule schedule;

    std::vector<int> connector_qubits() const;
};

/// Greedy degree-descending placement with backtracking. Throws
/// InfeasibleError (with the first unroutable edge as witness) or
/// BudgetExceededError.
WeavePlan plan_embedding(const TargetGraph& target, const DeviceLattice& device,
                         const PlannerPolicy& policy = {});

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EdgeReport {
    int u = -1, v = -1;
    std::string kind; // direct | static | dynamic
    double predicted_g_tilde_mhz = 0.0;
    double deviation_vs_j = 0.0;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    std::vector<EdgeReport> edges;

    bool ok() const;
    std::string summary() const;
};

/// Checks every WeavePlan invariant against the device and predicts the
/// effective coupling of each realized edge. Failures are reported, not
/// thrown.
ValidationReport validate_plan(const WeavePlan& plan, const DeviceLattice& device);

/// Merge the dynamic bridges into one global period: every bridge completes
/// an integer number of local periods, static couplings stay untouched, and
/// connector chains must be pairwise disjoint. Throws ValidationError when
/// segment durations are incommensurate or chains overlap.
FloquetSchedule compile_schedule(const WeavePlan& plan);

WeavePlan load_plan(const std::string& path);
void save_plan(const WeavePlan& plan, const std::string& path);
std::string plan_to_json_string(const WeavePlan& plan);
WeavePlan plan_from_json_string(const std::string& text);

} // namespace weave
