#include "weave/hamiltonian.hpp"

#include <cmath>
#include <ostream>

#include "weave/units.hpp"

namespace weave {

int HamiltonianMatrix::index_of_label(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw ValidationError("hamiltonian: unknown basis label '" + label + "'");
}

HamiltonianMatrix build_bhm(const DeviceLattice& device, const FockSpace& space) {
    if (space.sites() != device.qubit_count())
        throw ValidationError("build_bhm: Fock space has " + std::to_string(space.sites()) +
                              " sites but the device has " + std::to_string(device.qubit_count()) +
                              " qubits");
    for (const auto& q : device.qubits())
        if (q.levels < space.levels())
            throw ValidationError("build_bhm: Fock space levels exceed a qubit's truncation");

    const int dim = space.dimension();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

    for (int i = 0; i < dim; ++i) {
        const auto& occ = space.state(i);
        double diag = 0.0;
        for (int j = 0; j < space.sites(); ++j) {
            const auto& q = device.qubit(j);
            diag += q.omega_mhz * occ[j] + 0.5 * q.alpha_mhz * occ[j] * (occ[j] - 1);
        }
        h(i, i) = to_angular(diag);
    }

    // Hopping: <.. n_j+1 .. n_k-1 ..| a+_j a_k |.. n_j .. n_k ..> = sqrt((n_j+1) n_k).
    std::vector<int> occ;
    for (const auto& c : device.couplers()) {
        if (c.g_mhz == 0.0) continue;
        const double g = to_angular(c.g_mhz);
        for (int i = 0; i < dim; ++i) {
            occ = space.state(i);
            for (auto [from, to] : {std::pair{c.a, c.b}, std::pair{c.b, c.a}}) {
                if (occ[from] == 0 || occ[to] == space.levels() - 1) continue;
                const double amp = std::sqrt(static_cast<double>(occ[from]) * (occ[to] + 1));
                occ[from] -= 1;
                occ[to] += 1;
                if (auto target = space.index_of(occ)) h(*target, i) += g * amp;
                occ[from] += 1;
                occ[to] -= 1;
            }
        }
    }

    const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * std::max(1.0, h.cwiseAbs().maxCoeff()))
        throw NumericError("build_bhm: assembled matrix lost hermiticity");

    HamiltonianMatrix out;
    out.matrix = std::move(h);
    out.kind = HamiltonianKind::Full;
    out.space = std::make_shared<FockSpace>(space);
    out.labels.reserve(dim);
    for (int i = 0; i < dim; ++i) out.labels.push_back(space.label(i));
    return out;
}

HamiltonianMatrix project_single_excitation(const HamiltonianMatrix& h) {
    if (!h.space)
        throw ValidationError("project_single_excitation: input has no Fock-space basis");
    if (h.space->total_excitation())
        throw ValidationError("project_single_excitation: input must be built over an unrestricted space");

    const auto& space = *h.space;
    const int n = space.sites();
    std::vector<int> rows(n, -1);
    for (int j = 0; j < n; ++j) {
        std::vector<int> occ(n, 0);
        occ[j] = 1;
        auto idx = space.index_of(occ);
        if (!idx)
            throw ValidationError("project_single_excitation: basis lacks single-excitation states");
        rows[j] = *idx;
    }

    HamiltonianMatrix out;
    out.matrix.resize(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out.matrix(j, k) = h.matrix(rows[j], rows[k]);
    out.kind = HamiltonianKind::SingleExcitation;
    // Qubit order, not lexicographic order; no FockSpace is attached.
    out.labels.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::string label(n, '0');
        label[j] = '1';
        out.labels.push_back(std::move(label));
    }
    return out;
}

HamiltonianMatrix single_excitation_hamiltonian(const DeviceLattice& device) {
    const int n = device.qubit_count();
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
    for (int j = 0; j < n; ++j) h(j, j) = to_angular(device.qubit(j).omega_mhz);
    for (const auto& c : device.couplers()) {
        h(c.a, c.b) += to_angular(c.g_mhz);
        h(c.b, c.a) += to_angular(c.g_mhz);
    }
    HamiltonianMatrix out;
    out.matrix = std::move(h);
    out.kind = HamiltonianKind::SingleExcitation;
    out.labels.reserve(n);
    for (int j = 0; j < n; ++j) {
        std::string label(n, '0');
        label[j] = '1';
        out.labels.push_back(std::move(label));
    }
    return out;
}

void dump_matrix(const HamiltonianMatrix& h, std::ostream& out) {
    out.precision(17);
    const int dim = h.dimension();
    out << "# dim " << dim << ", rad/us, row-major (re imag) pairs\n";
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (j) out << ' ';
            out << h.matrix(i, j).real() << ' ' << h.matrix(i, j).imag();
        }
        out << '\n';
    }
}

} // namespace weave
