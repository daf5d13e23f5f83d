#include "weave/weaver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "weave/effective.hpp"
#include "weave/units.hpp"

namespace weave {

using nlohmann::json;

std::string to_string(BridgeKind k) {
    return k == BridgeKind::Static ? "static" : "dynamic";
}

std::vector<int> WeavePlan::connector_qubits() const {
    std::vector<int> out;
    for (const auto& b : bridges) out.insert(out.end(), b.path.begin(), b.path.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

/// Predicted effective coupling of a static one-connector bridge: EBD-LA on
/// the single-excitation three-site chain with the connector parked
/// `detuning` above the nodes.
double static_bridge_coupling(double g_mhz, double detuning_mhz) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(1, 1) = to_angular(detuning_mhz);
    m(0, 1) = m(1, 0) = to_angular(g_mhz);
    m(1, 2) = m(2, 1) = to_angular(g_mhz);
    HamiltonianMatrix h;
    h.matrix = std::move(m);
    h.kind = HamiltonianKind::SingleExcitation;
    h.labels = {"100", "010", "001"};
    return ebd_la(h, {"100", "001"}).g_tilde_mhz()(0, 1);
}

double predicted_bridge_coupling(const Bridge& b) {
    if (b.kind == BridgeKind::Static)
        return static_bridge_coupling(b.coupling_g_mhz, b.detuning_mhz);
    return pew_scaling(b.coupling_g_mhz, b.connector_count());
}

struct Placement {
    std::vector<int> vertex_to_qubit; // -1 while unplaced
    std::vector<int> cell_state;      // -1 free, -2 connector, >=0 vertex id
    std::vector<Bridge> bridges;
    std::vector<std::pair<int, int>> direct_edges;
};

class Planner {
public:
    Planner(const TargetGraph& target, const DeviceLattice& device, const PlannerPolicy& policy)
        : target_(target), device_(device), policy_(policy), rng_(policy.seed) {
        neighbors_.resize(device.qubit_count());
        for (const auto& c : device.couplers()) {
            neighbors_[c.a].push_back(c.b);
            neighbors_[c.b].push_back(c.a);
        }
        for (auto& n : neighbors_) std::sort(n.begin(), n.end());
    }

    WeavePlan run() {
        const int n = target_.n();
        if (n > device_.qubit_count())
            throw InfeasibleError("infeasible: " + std::to_string(n) + " vertices, " +
                                  std::to_string(device_.qubit_count()) + " qubits");
        for (int v = 0; v < n; ++v)
            if (target_.degree(v) > 4) {
                int w = 0;
                while (target_.adjacency(v, w) == 0) ++w;
                throw InfeasibleError("infeasible: vertex " + std::to_string(v) + " has degree " +
                                          std::to_string(target_.degree(v)) +
                                          " but a grid qubit has at most 4 neighbours",
                                      v, w);
            }

        order_.resize(n);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return target_.degree(a) > target_.degree(b);
        });

        state_.vertex_to_qubit.assign(n, -1);
        state_.cell_state.assign(device_.qubit_count(), -1);
        expansions_ = 0;

        if (!place(0)) {
            if (fail_edge_.first >= 0)
                throw InfeasibleError("infeasible: could not route edge (" +
                                          std::to_string(fail_edge_.first) + "," +
                                          std::to_string(fail_edge_.second) + ")",
                                      fail_edge_.first, fail_edge_.second);
            throw InfeasibleError("infeasible: no placement found");
        }
        return assemble();
    }

private:
    bool place(size_t depth) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];

        // Candidate cells ranked by bridge cost, then closeness to the
        // already-placed neighbours; seeded shuffle breaks remaining ties.
        struct Cand {
            int cell;
            int dist;
        };
        std::vector<int> placed_neighbors;
        for (int u = 0; u < target_.n(); ++u)
            if (target_.adjacency(v, u) && state_.vertex_to_qubit[u] >= 0)
                placed_neighbors.push_back(u);

        std::vector<Cand> cands;
        for (int cell = 0; cell < device_.qubit_count(); ++cell) {
            if (state_.cell_state[cell] != -1) continue;
            int dist = 0;
            for (int u : placed_neighbors) {
                const auto& qa = device_.qubit(cell);
                const auto& qb = device_.qubit(state_.vertex_to_qubit[u]);
                dist += std::abs(qa.row - qb.row) + std::abs(qa.col - qb.col);
            }
            cands.push_back({cell, dist});
        }
        std::shuffle(cands.begin(), cands.end(), rng_);
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.dist < b.dist; });

        for (const auto& cand : cands) {
            if (++expansions_ > policy_.node_budget)
                throw BudgetExceededError("planner: search budget of " +
                                          std::to_string(policy_.node_budget) +
                                          " expansions exceeded");
            auto saved = state_;
            if (try_place(v, cand.cell, placed_neighbors)) {
                if (place(depth + 1)) return true;
            }
            state_ = std::move(saved);
        }
        return false;
    }

    bool try_place(int v, int cell, const std::vector<int>& placed_neighbors) {
        state_.vertex_to_qubit[v] = cell;
        state_.cell_state[cell] = v;
        for (int u : placed_neighbors) {
            if (!realize_edge(v, u)) {
                if (fail_edge_.first < 0) fail_edge_ = {std::min(u, v), std::max(u, v)};
                return false;
            }
        }
        return true;
    }

    bool realize_edge(int v, int u) {
        const int a = state_.vertex_to_qubit[v];
        const int b = state_.vertex_to_qubit[u];
        if (device_.coupler_between(a, b)) {
            state_.direct_edges.emplace_back(std::min(u, v), std::max(u, v));
            return true;
        }
        const auto path = shortest_free_path(a, b);
        if (path.empty()) return false;
        const int connectors = static_cast<int>(path.size());
        Bridge bridge;
        bridge.vertex_u = std::min(u, v);
        bridge.vertex_v = std::max(u, v);
        bridge.path = path;
        bridge.coupling_g_mhz = policy_.bridge_coupling_mhz;
        bridge.detuning_mhz = policy_.static_detuning_mhz;
        if (connectors <= policy_.max_static_connectors) {
            bridge.kind = BridgeKind::Static;
        } else if (policy_.allow_dynamic && connectors <= policy_.max_dynamic_connectors) {
            bridge.kind = BridgeKind::Dynamic;
        } else {
            return false;
        }
        // Paths are stored oriented from the smaller vertex id; BFS produced
        // the path from v's cell, so flip it when u is the smaller one.
        if (u < v) std::reverse(bridge.path.begin(), bridge.path.end());
        for (int c : bridge.path) state_.cell_state[c] = -2;
        state_.bridges.push_back(std::move(bridge));
        return true;
    }

    /// Shortest path between qubits a and b whose interior cells are free,
    /// following couplers; returns the interior (connector) cells, a-side
    /// first, or empty when no usable path exists.
    std::vector<int> shortest_free_path(int a, int b) const {
        const int n = device_.qubit_count();
        std::vector<int> parent(n, -3);
        std::deque<int> queue;
        parent[a] = a;
        queue.push_back(a);
        const int max_interior =
            policy_.allow_dynamic ? policy_.max_dynamic_connectors : policy_.max_static_connectors;
        std::vector<int> depth(n, 0);
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            if (depth[cur] > max_interior) break;
            for (int nb : neighbors_[cur]) {
                if (parent[nb] != -3) continue;
                if (nb == b) {
                    if (cur == a) return {}; // adjacent pairs are handled as direct edges
                    std::vector<int> path;
                    for (int c = cur; c != a; c = parent[c]) path.push_back(c);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (state_.cell_state[nb] != -1) continue;
                parent[nb] = cur;
                depth[nb] = depth[cur] + 1;
                queue.push_back(nb);
            }
        }
        return {};
    }

    WeavePlan assemble() {
        WeavePlan plan;
        plan.graph = target_;
        plan.vertex_to_qubit = state_.vertex_to_qubit;
        plan.direct_edges = state_.direct_edges;
        plan.bridges = state_.bridges;
        std::sort(plan.direct_edges.begin(), plan.direct_edges.end());
        std::sort(plan.bridges.begin(), plan.bridges.end(), [](const Bridge& x, const Bridge& y) {
            return std::tie(x.vertex_u, x.vertex_v) < std::tie(y.vertex_u, y.vertex_v);
        });

        double j = 0.0;
        bool have_bridge = false;
        for (const auto& b : plan.bridges) {
            const double g = std::abs(predicted_bridge_coupling(b));
            j = have_bridge ? std::min(j, g) : g;
            have_bridge = true;
        }
        if (!have_bridge) {
            // No bridges: run the walk at the weakest usable direct coupler.
            j = std::numeric_limits<double>::infinity();
            for (auto [u, v] : plan.direct_edges) {
                const CouplerSpec* c =
                    device_.coupler_between(plan.vertex_to_qubit[u], plan.vertex_to_qubit[v]);
                j = std::min(j, c->g_max_mhz);
            }
            if (!std::isfinite(j)) j = device_.g_floor_mhz();
        }
        plan.walk_speed.j_mhz = std::max(j, device_.g_floor_mhz());
        plan.schedule = compile_schedule(plan);
        return plan;
    }

    const TargetGraph& target_;
    const DeviceLattice& device_;
    PlannerPolicy policy_;
    std::mt19937_64 rng_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<int> order_;
    Placement state_;
    std::int64_t expansions_ = 0;
    std::pair<int, int> fail_edge_{-1, -1};
};

} // namespace

WeavePlan plan_embedding(const TargetGraph& target, const DeviceLattice& device,
                         const PlannerPolicy& policy) {
    return Planner(target, device, policy).run();
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.pass ? "pass" : "FAIL") << "  " << c.name
            << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return out.str();
}

namespace {

bool is_grid_path(const DeviceLattice& device, int from, const std::vector<int>& path, int to) {
    int prev = from;
    for (int c : path) {
        if (!device.coupler_between(prev, c)) return false;
        prev = c;
    }
    return device.coupler_between(prev, to) != nullptr;
}

double min_gmax_on_path(const DeviceLattice& device, int from, const std::vector<int>& path,
                        int to) {
    double m = std::numeric_limits<double>::infinity();
    int prev = from;
    auto step = [&](int next) {
        const CouplerSpec* c = device.coupler_between(prev, next);
        if (c) m = std::min(m, c->g_max_mhz);
        prev = next;
    };
    for (int c : path) step(c);
    step(to);
    return m;
}

} // namespace

ValidationReport validate_plan(const WeavePlan& plan, const DeviceLattice& device) {
    ValidationReport report;
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report.checks.push_back({name, pass, detail});
        return pass;
    };

    const int n = plan.graph.n();
    bool map_ok = static_cast<int>(plan.vertex_to_qubit.size()) == n;
    std::vector<int> seen;
    if (map_ok)
        for (int q : plan.vertex_to_qubit) {
            if (q < 0 || q >= device.qubit_count() ||
                std::find(seen.begin(), seen.end(), q) != seen.end()) {
                map_ok = false;
                break;
            }
            seen.push_back(q);
        }
    check("vertex-map", map_ok,
          map_ok ? std::to_string(n) + " vertices on distinct qubits" : "bad vertex->qubit map");
    if (!map_ok) return report;

    const auto connectors = plan.connector_qubits();
    bool disjoint = true;
    for (int c : connectors)
        if (std::find(plan.vertex_to_qubit.begin(), plan.vertex_to_qubit.end(), c) !=
            plan.vertex_to_qubit.end())
            disjoint = false;
    check("node-connector-disjoint", disjoint);

    // Every target edge realized by exactly one mechanism, and nothing extra.
    std::vector<std::pair<int, int>> realized;
    for (auto [u, v] : plan.direct_edges) realized.emplace_back(std::min(u, v), std::max(u, v));
    for (const auto& b : plan.bridges)
        realized.emplace_back(std::min(b.vertex_u, b.vertex_v), std::max(b.vertex_u, b.vertex_v));
    std::sort(realized.begin(), realized.end());
    const bool no_duplicates = std::adjacent_find(realized.begin(), realized.end()) == realized.end();
    auto target_edges = plan.graph.edges();
    std::sort(target_edges.begin(), target_edges.end());
    check("edges-realized", no_duplicates && realized == target_edges,
          no_duplicates ? std::to_string(realized.size()) + " of " +
                              std::to_string(target_edges.size()) + " target edges"
                        : "an edge is realized twice");

    bool direct_ok = true;
    std::string direct_detail;
    for (auto [u, v] : plan.direct_edges) {
        const CouplerSpec* c =
            device.coupler_between(plan.vertex_to_qubit[u], plan.vertex_to_qubit[v]);
        if (!c) {
            direct_ok = false;
            direct_detail = "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has no device coupler";
            break;
        }
        if (c->g_max_mhz < plan.walk_speed.j_mhz) {
            direct_ok = false;
            direct_detail = "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") cannot reach the walk speed";
            break;
        }
    }
    check("direct-adjacency", direct_ok, direct_detail);

    bool paths_ok = true, static_len_ok = true, dynamic_len_ok = true, range_ok = true;
    std::string path_detail, static_detail, dynamic_detail, range_detail;
    for (const auto& b : plan.bridges) {
        const int qu = plan.vertex_to_qubit[b.vertex_u];
        const int qv = plan.vertex_to_qubit[b.vertex_v];
        if (b.path.empty() || !is_grid_path(device, qu, b.path, qv)) {
            paths_ok = false;
            path_detail = "bridge (" + std::to_string(b.vertex_u) + "," +
                          std::to_string(b.vertex_v) + ") path is not a coupler chain";
        }
        if (b.kind == BridgeKind::Static && b.connector_count() > 1) {
            static_len_ok = false;
            static_detail = "static bridge (" + std::to_string(b.vertex_u) + "," +
                            std::to_string(b.vertex_v) + ") uses " +
                            std::to_string(b.connector_count()) +
                            " connectors; static bridges are limited to one";
        }
        if (b.kind == BridgeKind::Dynamic && b.connector_count() > 7) {
            dynamic_len_ok = false;
            dynamic_detail = "dynamic bridge (" + std::to_string(b.vertex_u) + "," +
                             std::to_string(b.vertex_v) + ") uses " +
                             std::to_string(b.connector_count()) +
                             " connectors; dynamic bridges are limited to seven";
        }
        if (!b.path.empty() &&
            b.coupling_g_mhz > min_gmax_on_path(device, qu, b.path, qv) + 1e-12) {
            range_ok = false;
            range_detail = "bridge coupling exceeds a path coupler's g_max";
        }
    }
    check("bridge-paths", paths_ok, path_detail);
    check("static-bridge-length", static_len_ok, static_detail);
    check("dynamic-bridge-length", dynamic_len_ok, dynamic_detail);
    check("bridge-coupling-range", range_ok, range_detail);

    bool static_disjoint = true, dynamic_disjoint = true;
    {
        std::vector<int> static_cells, dynamic_cells;
        for (const auto& b : plan.bridges) {
            auto& pool = b.kind == BridgeKind::Static ? static_cells : dynamic_cells;
            for (int c : b.path) {
                if (std::find(pool.begin(), pool.end(), c) != pool.end()) {
                    (b.kind == BridgeKind::Static ? static_disjoint : dynamic_disjoint) = false;
                }
                pool.push_back(c);
            }
        }
    }
    check("static-bridges-disjoint", static_disjoint,
          static_disjoint ? "" : "a connector appears in two static bridges");
    check("dynamic-bridges-disjoint", dynamic_disjoint,
          dynamic_disjoint ? "" : "dynamic connector chains overlap");

    // Predictions per edge, and the coupling floor.
    bool floor_ok = plan.walk_speed.j_mhz >= device.g_floor_mhz();
    for (auto [u, v] : plan.direct_edges) {
        EdgeReport e;
        e.u = u;
        e.v = v;
        e.kind = "direct";
        e.predicted_g_tilde_mhz = plan.walk_speed.j_mhz; // coupler tuned to J
        e.deviation_vs_j = 0.0;
        report.edges.push_back(e);
    }
    for (const auto& b : plan.bridges) {
        EdgeReport e;
        e.u = b.vertex_u;
        e.v = b.vertex_v;
        e.kind = to_string(b.kind);
        e.predicted_g_tilde_mhz = predicted_bridge_coupling(b);
        e.deviation_vs_j = std::abs((std::abs(e.predicted_g_tilde_mhz) - plan.walk_speed.j_mhz) /
                                    plan.walk_speed.j_mhz);
        if (std::abs(e.predicted_g_tilde_mhz) < device.g_floor_mhz()) floor_ok = false;
        report.edges.push_back(e);
    }
    check("coupling-floor", floor_ok,
          floor_ok ? "all engineered couplings clear g_floor"
                   : "an engineered coupling falls below g_floor");

    // Static connectors sitting next to a dynamic chain are flagged (their
    // interplay is not modelled), but this does not fail the plan.
    std::string interaction;
    for (const auto& s : plan.bridges) {
        if (s.kind != BridgeKind::Static) continue;
        for (int c : s.path)
            for (const auto& d : plan.bridges) {
                if (d.kind != BridgeKind::Dynamic) continue;
                for (int dc : d.path)
                    if (device.coupler_between(c, dc))
                        interaction = "warning: static connector " + std::to_string(c) +
                                      " is adjacent to a dynamic chain";
            }
    }
    check("bridge-interaction", true, interaction);

    bool schedule_ok = true;
    std::string schedule_detail;
    try {
        const FloquetSchedule expected = compile_schedule(plan);
        if (expected.segments.size() != plan.schedule.segments.size()) {
            schedule_ok = false;
            schedule_detail = "stored schedule does not match the compiled one";
        } else {
            for (size_t i = 0; i < expected.segments.size(); ++i) {
                auto a = expected.segments[i].edges;
                auto b = plan.schedule.segments[i].edges;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b || std::abs(expected.segments[i].duration_us -
                                       plan.schedule.segments[i].duration_us) > 1e-12) {
                    schedule_ok = false;
                    schedule_detail = "stored schedule does not match the compiled one";
                    break;
                }
            }
        }
    } catch (const std::exception& e) {
        schedule_ok = false;
        schedule_detail = e.what();
    }
    check("schedule-consistency", schedule_ok, schedule_detail);

    return report;
}

FloquetSchedule compile_schedule(const WeavePlan& plan) {
    std::vector<const Bridge*> dynamic;
    for (const auto& b : plan.bridges)
        if (b.kind == BridgeKind::Dynamic) dynamic.push_back(&b);
    if (dynamic.empty()) return {};

    // All dynamic bridges must run on one segment clock.
    const double dt = 1.0 / (4.0 * dynamic.front()->coupling_g_mhz);
    for (const Bridge* b : dynamic) {
        const double dtb = 1.0 / (4.0 * b->coupling_g_mhz);
        if (std::abs(dtb - dt) > 1e-9 * dt)
            throw ValidationError("compile_schedule: bridges with incommensurate local periods "
                                  "(different couplings) cannot share the global period");
    }

    // Chains must be pairwise disjoint to toggle in the same segments.
    std::vector<int> used;
    for (const Bridge* b : dynamic)
        for (int c : b->path) {
            if (std::find(used.begin(), used.end(), c) != used.end())
                throw ValidationError("compile_schedule: overlapping dynamic connector chains");
            used.push_back(c);
        }

    std::int64_t segments = 1;
    for (const Bridge* b : dynamic)
        segments = std::lcm(segments, static_cast<std::int64_t>(b->connector_count() + 1));

    FloquetSchedule out;
    out.segments.resize(static_cast<size_t>(segments));
    for (auto& s : out.segments) s.duration_us = dt;

    for (const Bridge* b : dynamic) {
        const FloquetSchedule local = pew_chain_schedule(b->connector_count(), b->coupling_g_mhz);
        // Chain in qubit indices: node_u, connectors..., node_v.
        std::vector<int> chain;
        chain.push_back(plan.vertex_to_qubit[b->vertex_u]);
        chain.insert(chain.end(), b->path.begin(), b->path.end());
        chain.push_back(plan.vertex_to_qubit[b->vertex_v]);
        const int local_count = static_cast<int>(local.segments.size());
        for (std::int64_t s = 0; s < segments; ++s)
            for (auto [i, j] : local.segments[s % local_count].edges)
                out.segments[static_cast<size_t>(s)].edges.emplace_back(chain[i], chain[j]);
    }
    return out;
}

namespace {

json bridge_to_json(const Bridge& b) {
    return json{{"kind", to_string(b.kind)},
                {"u", b.vertex_u},
                {"v", b.vertex_v},
                {"path", b.path},
                {"detuning_mhz", b.detuning_mhz},
                {"coupling_g_mhz", b.coupling_g_mhz}};
}

Bridge bridge_from_json(const json& j) {
    Bridge b;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "static")
        b.kind = BridgeKind::Static;
    else if (kind == "dynamic")
        b.kind = BridgeKind::Dynamic;
    else
        throw ValidationError("plan: unknown bridge kind '" + kind + "'");
    b.vertex_u = j.at("u").get<int>();
    b.vertex_v = j.at("v").get<int>();
    b.path = j.at("path").get<std::vector<int>>();
    b.detuning_mhz = j.at("detuning_mhz").get<double>();
    b.coupling_g_mhz = j.at("coupling_g_mhz").get<double>();
    return b;
}

} // namespace

std::string plan_to_json_string(const WeavePlan& plan) {
    json adjacency = json::array();
    for (int i = 0; i < plan.graph.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < plan.graph.n(); ++j) row.push_back(plan.graph.adjacency(i, j));
        adjacency.push_back(std::move(row));
    }
    json direct = json::array();
    for (auto [u, v] : plan.direct_edges) direct.push_back({u, v});
    json bridges = json::array();
    for (const auto& b : plan.bridges) bridges.push_back(bridge_to_json(b));
    json segs = json::array();
    for (const auto& s : plan.schedule.segments) {
        json edges = json::array();
        for (auto [a, b] : s.edges) edges.push_back({a, b});
        segs.push_back({{"duration_us", s.duration_us}, {"edges", edges}});
    }
    return json{{"version", 1},
                {"graph", {{"version", 1}, {"adjacency", adjacency}}},
                {"vertex_to_qubit", plan.vertex_to_qubit},
                {"direct_edges", direct},
                {"bridges", bridges},
                {"walk_speed_mhz", plan.walk_speed.j_mhz},
                {"schedule", {{"version", 1}, {"segments", segs}}}}
               .dump(2) +
           "\n";
}

WeavePlan plan_from_json_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("plan: ") + e.what());
    }
    if (!j.contains("version") || j.at("version").get<int>() != 1)
        throw ValidationError("plan: missing or unsupported version");

    WeavePlan plan;
    plan.graph = graph_from_json_string(j.at("graph").dump());
    plan.vertex_to_qubit = j.at("vertex_to_qubit").get<std::vector<int>>();
    for (const auto& e : j.at("direct_edges"))
        plan.direct_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    for (const auto& b : j.at("bridges")) plan.bridges.push_back(bridge_from_json(b));
    plan.walk_speed.j_mhz = j.at("walk_speed_mhz").get<double>();
    plan.schedule = schedule_from_json_string(j.at("schedule").dump());
    return plan;
}

WeavePlan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return plan_from_json_string(text);
}

void save_plan(const WeavePlan& plan, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << plan_to_json_string(plan);
}

} // namespace weave
