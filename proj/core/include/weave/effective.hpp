#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "weave/hamiltonian.hpp"

namespace weave {

enum class EffectiveMethod { Bloch2, Bloch4, StarSeries, StarClosed, EbdLa, PewAnalytic };

std::string to_string(EffectiveMethod m);
EffectiveMethod effective_method_from_string(const std::string& name);

/// Perturbative formulas are trusted while max |g/Delta| stays below this.
inline constexpr double kDispersiveBound = 0.25;

/// Detunings Delta_i = omega_i - omega_connector of the node qubits.
struct DetuningSet {
    Eigen::VectorXd delta_mhz;

    /// Throws on any zero detuning (perturbative formulas blow up there).
    void require_nonzero() const;
    /// True when max_i |g / Delta_i| < bound.
    bool dispersive(double g_mhz, double bound = kDispersiveBound) const;
};

/// Effective Hamiltonian on a labelled subspace. `h_eff_rad` is the raw
/// Hermitian block in rad/us; couplings and shifted frequencies are read off
/// in MHz. For the perturbative constructors omega_tilde is the bare node
/// frequency (0 unless supplied) plus the derived shift.
struct EffectiveModel {
    std::vector<std::string> basis_labels;
    Eigen::MatrixXcd h_eff_rad;
    EffectiveMethod method = EffectiveMethod::EbdLa;
    bool dispersive = true;

    int dimension() const { return static_cast<int>(h_eff_rad.rows()); }
    /// Symmetric coupling matrix g~ in MHz, zero diagonal. Throws NumericError
    /// if the block carries a significant imaginary part.
    Eigen::MatrixXd g_tilde_mhz() const;
    /// Shifted frequencies omega~ in MHz (the diagonal).
    Eigen::VectorXd omega_tilde_mhz() const;
};

/// Repackage an effective model for the dynamics module.
HamiltonianMatrix to_hamiltonian(const EffectiveModel& model);

/// Three-qubit chain Q1-Q2-Q3 with Q2 eliminated: fourth-order effective
/// coupling g~13 and the diagonal shifts on Q1, Q3, from Bloch perturbation
/// theory with the two off-diagonal coefficients averaged. Basis {Q1, Q3}.
EffectiveModel bloch_three_qubit(double g12_mhz, double g23_mhz, double delta1_mhz,
                                 double delta3_mhz, double omega1_mhz = 0.0,
                                 double omega3_mhz = 0.0, int order = 4);

/// Four-qubit chain Q1-Q2-Q3-Q4 with Q2 eliminated. Basis {Q1, Q3, Q4};
/// returns g~13, g~34 and the parasitic long-range g~14.
EffectiveModel bloch_four_chain(double g12_mhz, double g23_mhz, double g34_mhz,
                                double delta1_mhz, double delta3_mhz, double delta4_mhz,
                                double omega1_mhz = 0.0, double omega3_mhz = 0.0,
                                double omega4_mhz = 0.0);

/// Five-qubit 2D unit (Q3 also couples Q4 and Q5) with Q2 eliminated.
/// Basis {Q1, Q3, Q4, Q5}; returns g~13, g~34, g~35, g~14, g~15.
EffectiveModel bloch_2d(double g12_mhz, double g23_mhz, double g34_mhz, double g35_mhz,
                        double delta1_mhz, double delta3_mhz, double delta4_mhz,
                        double delta5_mhz, double omega1_mhz = 0.0, double omega3_mhz = 0.0,
                        double omega4_mhz = 0.0, double omega5_mhz = 0.0);

/// Exact Catalan number C_p, p in [0, 100].
boost::multiprecision::cpp_int catalan(int p);

struct StarSeriesResult {
    double g_tilde_mhz = 0.0;  ///< partial sum through p_max
    bool converges = false;    ///< N < Delta^2 / (4 g^2)
    double radius_ratio = 0.0; ///< 4 N g^2 / Delta^2 (< 1 inside the radius)
};

/// Star graph with N peripherals uniformly coupled to one hub:
/// g~ = (g^2/Delta) sum_p C_p (-N g^2/Delta^2)^p, truncated at p_max.
StarSeriesResult star_series(int n_peripheral, double g_mhz, double delta_mhz, int p_max);

/// Closed form of the same coupling: sign(Delta) (sqrt(Delta^2+4Ng^2)-|Delta|)/(2N).
double star_closed(int n_peripheral, double g_mhz, double delta_mhz);

/// Exact block diagonalization by least action. Eigenvectors are assigned to
/// the subspace by descending subspace-projection norm; with Z the subspace
/// rows of the assigned eigenvectors and L their eigenvalues, the effective
/// block is (ZZ+)^(-1/2) Z L Z+ (ZZ+)^(-1/2) -- Hermitian and carrying exactly
/// the assigned eigenvalues. A tie at the selection boundary (within 1e-9)
/// raises NumericError, as does a rank-deficient overlap.
EffectiveModel ebd_la(const HamiltonianMatrix& h, const std::vector<std::string>& subspace_labels);

/// Effective end-to-end coupling of a detuned-connector chain per connector
/// count 1..max_connectors, each from ebd_la on the single-excitation chain
/// (nodes at 0, connectors at -delta so that Delta = delta).
std::vector<std::pair<int, double>> sew_scaling(int max_connectors, double g_mhz,
                                                double delta_mhz);

} // namespace weave
