#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "weave/errors.hpp"

namespace weave {

/// One transmon on a grid cell. `omega_mhz` is the qubit frequency and
/// `alpha_mhz` the anharmonicity (the Bose-Hubbard on-site interaction;
/// the builder applies it as (alpha/2) a+ a+ a a). Both linear MHz.
struct TransmonSpec {
    int row = 0;
    int col = 0;
    double omega_mhz = 0.0;
    double alpha_mhz = 0.0;
    int levels = 3;
};

/// Tunable coupler between two lattice-adjacent qubits a,b with hopping
/// strength g settable in [0, g_max].
struct CouplerSpec {
    int a = 0;
    int b = 0;
    double g_mhz = 0.0;
    double g_max_mhz = 0.0;
};

/// Immutable device: transmons on cells of a rows x cols grid (cells may be
/// empty), couplers on nearest-neighbour edges, and the minimum useful
/// effective coupling g_floor below which an engineered edge is considered
/// drowned by residual couplings.
class DeviceLattice {
public:
    DeviceLattice(int rows, int cols, std::vector<TransmonSpec> qubits,
                  std::vector<CouplerSpec> couplers, double g_floor_mhz = 3.0);

    /// Fully occupied grid with uniform parameters and couplers on every
    /// nearest-neighbour edge.
    static DeviceLattice uniform_grid(int rows, int cols, double omega_mhz,
                                      double alpha_mhz, double g_mhz,
                                      double g_max_mhz, int levels = 3,
                                      double g_floor_mhz = 3.0);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int qubit_count() const { return static_cast<int>(qubits_.size()); }
    const std::vector<TransmonSpec>& qubits() const { return qubits_; }
    const TransmonSpec& qubit(int i) const { return qubits_.at(i); }
    const std::vector<CouplerSpec>& couplers() const { return couplers_; }
    double g_floor_mhz() const { return g_floor_mhz_; }

    std::optional<int> qubit_at(int row, int col) const;
    const CouplerSpec* coupler_between(int a, int b) const;
    std::vector<int> grid_neighbors(int q) const;

    /// Copies with one field changed; used to retune couplers or park
    /// connector frequencies without mutating a shared device.
    DeviceLattice with_qubit_omega(int q, double omega_mhz) const;
    DeviceLattice with_coupler_g(int a, int b, double g_mhz) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<TransmonSpec> qubits_;
    std::vector<CouplerSpec> couplers_;
    double g_floor_mhz_ = 3.0;
    std::vector<int> cell_to_qubit_; // rows*cols entries, -1 for empty cells
};

/// Unweighted target graph: symmetric 0/1 adjacency, zero diagonal.
struct TargetGraph {
    Eigen::MatrixXi adjacency;

    int n() const { return static_cast<int>(adjacency.rows()); }
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic

    /// Validates symmetry, binary entries and zero diagonal (no silent fixes).
    static TargetGraph from_adjacency(Eigen::MatrixXi adjacency);
    static TargetGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
};

/// Uniform hopping rate imposed on every realized edge of a woven graph.
struct WalkSpeed {
    double j_mhz = 0.0;
};

DeviceLattice load_device(const std::string& path);
void save_device(const DeviceLattice& device, const std::string& path);
std::string device_to_json_string(const DeviceLattice& device);
DeviceLattice device_from_json_string(const std::string& text);

TargetGraph load_graph(const std::string& path);
void save_graph(const TargetGraph& graph, const std::string& path);
std::string graph_to_json_string(const TargetGraph& graph);
TargetGraph graph_from_json_string(const std::string& text);

} // namespace weave
