#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "weave/fock.hpp"
#include "weave/model.hpp"

namespace weave {

enum class HamiltonianKind { Full, SingleExcitation, Effective };

/// Dense Hermitian matrix in angular rad/us over a labelled basis. `space`
/// is set when the basis is a Fock-product basis.
struct HamiltonianMatrix {
    Eigen::MatrixXcd matrix;
    std::vector<std::string> labels;
    HamiltonianKind kind = HamiltonianKind::Full;
    std::shared_ptr<const FockSpace> space;

    int dimension() const { return static_cast<int>(matrix.rows()); }
    int index_of_label(const std::string& label) const;
};

/// Assemble the truncated Bose-Hubbard Hamiltonian of the device over the
/// given Fock space:
///   H = sum_j (w_j n_j + (a_j/2) n_j(n_j-1)) + sum_<jk> g_jk (a+_j a_k + h.c.),
/// everything in rad/us.
HamiltonianMatrix build_bhm(const DeviceLattice& device, const FockSpace& space);

/// N x N block of a full Hamiltonian on the single-excitation states,
/// reordered so row j corresponds to the excitation sitting on qubit j.
/// Off-diagonals are the couplings, diagonals the qubit frequencies;
/// anharmonicity is absent since n <= 1.
HamiltonianMatrix project_single_excitation(const HamiltonianMatrix& h);

/// Direct single-excitation assembly (identical to projecting build_bhm).
HamiltonianMatrix single_excitation_hamiltonian(const DeviceLattice& device);

/// Debug dump: one row per line, matrix entries as "re imag" pairs.
void dump_matrix(const HamiltonianMatrix& h, std::ostream& out);

} // namespace weave
