#include "weave/effective.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "weave/units.hpp"

namespace weave {

std::string to_string(EffectiveMethod m) {
    switch (m) {
        case EffectiveMethod::Bloch2: return "bloch2";
        case EffectiveMethod::Bloch4: return "bloch4";
        case EffectiveMethod::StarSeries: return "star-series";
        case EffectiveMethod::StarClosed: return "star-closed";
        case EffectiveMethod::EbdLa: return "ebd-la";
        case EffectiveMethod::PewAnalytic: return "pew";
    }
    return "?";
}

EffectiveMethod effective_method_from_string(const std::string& name) {
    for (auto m : {EffectiveMethod::Bloch2, EffectiveMethod::Bloch4, EffectiveMethod::StarSeries,
                   EffectiveMethod::StarClosed, EffectiveMethod::EbdLa, EffectiveMethod::PewAnalytic})
        if (to_string(m) == name) return m;
    throw ValidationError("unknown method '" + name +
                          "' (expected bloch2|bloch4|star-series|star-closed|ebd-la)");
}

void DetuningSet::require_nonzero() const {
    for (Eigen::Index i = 0; i < delta_mhz.size(); ++i)
        if (delta_mhz[i] == 0.0)
            throw ValidationError("detuning: Delta_" + std::to_string(i + 1) + " is zero");
}

bool DetuningSet::dispersive(double g_mhz, double bound) const {
    for (Eigen::Index i = 0; i < delta_mhz.size(); ++i)
        if (std::abs(g_mhz / delta_mhz[i]) >= bound) return false;
    return true;
}

Eigen::MatrixXd EffectiveModel::g_tilde_mhz() const {
    const double scale = std::max(1.0, h_eff_rad.cwiseAbs().maxCoeff());
    if (h_eff_rad.imag().cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw NumericError("effective: block has a significant imaginary part; "
                           "real couplings are undefined");
    Eigen::MatrixXd g = h_eff_rad.real() / two_pi;
    g.diagonal().setZero();
    return (g + g.transpose()) / 2.0;
}

Eigen::VectorXd EffectiveModel::omega_tilde_mhz() const {
    return h_eff_rad.real().diagonal() / two_pi;
}

HamiltonianMatrix to_hamiltonian(const EffectiveModel& model) {
    HamiltonianMatrix h;
    h.matrix = model.h_eff_rad;
    h.labels = model.basis_labels;
    h.kind = HamiltonianKind::Effective;
    return h;
}

namespace {

EffectiveModel from_mhz(std::vector<std::string> labels, const Eigen::MatrixXd& mhz,
                        EffectiveMethod method, bool dispersive) {
    EffectiveModel m;
    m.basis_labels = std::move(labels);
    m.h_eff_rad = (mhz * two_pi).cast<std::complex<double>>();
    m.method = method;
    m.dispersive = dispersive;
    return m;
}

std::string one_hot_label(int sites, int site) {
    std::string s(sites, '0');
    s[site] = '1';
    return s;
}

} // namespace

EffectiveModel bloch_three_qubit(double g12, double g23, double d1, double d3,
                                 double omega1, double omega3, int order) {
    if (order != 2 && order != 4)
        throw ValidationError("bloch_three_qubit: order must be 2 or 4");
    DetuningSet det{Eigen::Vector2d(d1, d3)};
    det.require_nonzero();

    // Second order: coupling (g12 g23/2)(1/D1 + 1/D3), shifts g^2/D.
    double g13 = 0.5 * g12 * g23 * (1.0 / d1 + 1.0 / d3);
    double s1 = g12 * g12 / d1;
    double s3 = g23 * g23 / d3;
    if (order == 4) {
        const double sigma = g12 * g12 / d1 + g23 * g23 / d3;
        g13 -= 0.5 * g12 * g23 * sigma * (1.0 / (d1 * d1) + 1.0 / (d3 * d3));
        s1 -= g12 * g12 / (d1 * d1) * sigma;
        s3 -= g23 * g23 / (d3 * d3) * sigma;
    }

    Eigen::MatrixXd m(2, 2);
    m << omega1 + s1, g13, g13, omega3 + s3;
    const double gmax = std::max(std::abs(g12), std::abs(g23));
    return from_mhz({one_hot_label(3, 0), one_hot_label(3, 2)}, m,
                    order == 4 ? EffectiveMethod::Bloch4 : EffectiveMethod::Bloch2,
                    det.dispersive(gmax));
}

EffectiveModel bloch_four_chain(double g12, double g23, double g34, double d1, double d3,
                                double d4, double omega1, double omega3, double omega4) {
    DetuningSet det{Eigen::Vector3d(d1, d3, d4)};
    det.require_nonzero();

    const double sigma13 = g23 * g23 / d3 + g12 * g12 / d1;
    const double g13 = 0.5 * g23 * g12 *
                       (1.0 / d3 + 1.0 / d1 + g34 * g34 / (d4 * d3 * d3) -
                        sigma13 * (1.0 / (d3 * d3) + 1.0 / (d1 * d1)));
    const double gt34 = g34 - g23 * g23 * g34 / (d3 * d4);
    const double g14 = -g34 * g23 * g12 / (d3 * d4);

    // Diagonal shifts on the connector-coupled nodes, as in the three-qubit
    // case; Q4 couples only to node qubits and picks up no shift here.
    const double sigma = g12 * g12 / d1 + g23 * g23 / d3;
    const double s1 = g12 * g12 / d1 - g12 * g12 / (d1 * d1) * sigma;
    const double s3 = g23 * g23 / d3 - g23 * g23 / (d3 * d3) * sigma;

    Eigen::MatrixXd m(3, 3);
    m << omega1 + s1, g13, g14,
         g13, omega3 + s3, gt34,
         g14, gt34, omega4;
    const double gmax = std::max({std::abs(g12), std::abs(g23), std::abs(g34)});
    return from_mhz({one_hot_label(4, 0), one_hot_label(4, 2), one_hot_label(4, 3)}, m,
                    EffectiveMethod::Bloch4, det.dispersive(gmax));
}

EffectiveModel bloch_2d(double g12, double g23, double g34, double g35, double d1, double d3,
                        double d4, double d5, double omega1, double omega3, double omega4,
                        double omega5) {
    DetuningSet det{Eigen::Vector4d(d1, d3, d4, d5)};
    det.require_nonzero();

    const double sigma13 = g23 * g23 / d3 + g12 * g12 / d1;
    const double sigma45 = g34 * g34 / d4 + g35 * g35 / d5;
    const double g13 = 0.5 * g23 * g12 *
                       (1.0 / d3 + 1.0 / d1 + sigma45 / (d3 * d3) -
                        sigma13 * (1.0 / (d3 * d3) + 1.0 / (d1 * d1)));
    const double gt34 = g34 - g34 * g23 * g23 / (d3 * d4);
    const double gt35 = g35 - g35 * g23 * g23 / (d3 * d5);
    const double g14 = -g12 * g23 * g34 / (d3 * d4);
    const double g15 = -g35 * g23 * g12 / (d3 * d5);

    const double s1 = g12 * g12 / d1 - g12 * g12 / (d1 * d1) * sigma13;
    const double s3 = g23 * g23 / d3 - g23 * g23 / (d3 * d3) * sigma13;

    Eigen::MatrixXd m(4, 4);
    m << omega1 + s1, g13, g14, g15,
         g13, omega3 + s3, gt34, gt35,
         g14, gt34, omega4, 0.0,
         g15, gt35, 0.0, omega5;
    const double gmax = std::max({std::abs(g12), std::abs(g23), std::abs(g34), std::abs(g35)});
    return from_mhz({one_hot_label(5, 0), one_hot_label(5, 2), one_hot_label(5, 3),
                     one_hot_label(5, 4)},
                    m, EffectiveMethod::Bloch4, det.dispersive(gmax));
}

boost::multiprecision::cpp_int catalan(int p) {
    if (p < 0 || p > 100)
        throw ValidationError("catalan: p must be in [0, 100], got " + std::to_string(p));
    static const std::vector<boost::multiprecision::cpp_int> table = [] {
        std::vector<boost::multiprecision::cpp_int> c(101);
        c[0] = 1;
        for (int n = 0; n < 100; ++n) {
            boost::multiprecision::cpp_int acc = 0;
            for (int i = 0; i <= n; ++i) acc += c[i] * c[n - i];
            c[n + 1] = acc;
        }
        return c;
    }();
    return table[p];
}

StarSeriesResult star_series(int n_peripheral, double g_mhz, double delta_mhz, int p_max) {
    if (n_peripheral < 1) throw ValidationError("star_series: N must be >= 1");
    if (p_max < 0) throw ValidationError("star_series: p_max must be >= 0");
    if (p_max > 100) throw ValidationError("star_series: p_max beyond the exact Catalan range (100)");
    if (delta_mhz == 0.0) throw ValidationError("star_series: zero detuning");

    const double x = -n_peripheral * g_mhz * g_mhz / (delta_mhz * delta_mhz);
    double sum = 0.0;
    double xp = 1.0;
    for (int p = 0; p <= p_max; ++p) {
        sum += catalan(p).convert_to<double>() * xp;
        xp *= x;
    }
    StarSeriesResult out;
    out.g_tilde_mhz = g_mhz * g_mhz / delta_mhz * sum;
    out.radius_ratio = 4.0 * std::abs(x);
    out.converges = n_peripheral < delta_mhz * delta_mhz / (4.0 * g_mhz * g_mhz);
    return out;
}

double star_closed(int n_peripheral, double g_mhz, double delta_mhz) {
    if (n_peripheral < 1) throw ValidationError("star_closed: N must be >= 1");
    if (delta_mhz == 0.0) throw ValidationError("star_closed: zero detuning");
    const double sign = delta_mhz > 0 ? 1.0 : -1.0;
    const double root = std::sqrt(delta_mhz * delta_mhz + 4.0 * n_peripheral * g_mhz * g_mhz);
    return sign * (root - std::abs(delta_mhz)) / (2.0 * n_peripheral);
}

EffectiveModel ebd_la(const HamiltonianMatrix& h, const std::vector<std::string>& subspace_labels) {
    const int dim = h.dimension();
    const int m = static_cast<int>(subspace_labels.size());
    if (m == 0) throw ValidationError("ebd_la: empty subspace");
    if (m >= dim) throw ValidationError("ebd_la: subspace must be a strict subset of the basis");

    const double scale = std::max(1.0, h.matrix.cwiseAbs().maxCoeff());
    if ((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw NumericError("ebd_la: input matrix is not Hermitian");

    std::vector<int> sub_rows(m);
    for (int i = 0; i < m; ++i) sub_rows[i] = h.index_of_label(subspace_labels[i]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
    if (solver.info() != Eigen::Success)
        throw NumericError("ebd_la: eigendecomposition failed");
    const Eigen::MatrixXcd& vecs = solver.eigenvectors();
    const Eigen::VectorXd& vals = solver.eigenvalues();

    // Greedy assignment by descending subspace-projection norm.
    Eigen::VectorXd proj(dim);
    for (int k = 0; k < dim; ++k) {
        double p = 0.0;
        for (int r : sub_rows) p += std::norm(vecs(r, k));
        proj[k] = p;
    }
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return proj[a] > proj[b]; });
    if (proj[order[m - 1]] - proj[order[m]] < 1e-9)
        throw NumericError("ebd_la: assignment ambiguity, two eigenvectors tie in subspace "
                           "overlap at the selection boundary (degenerate crossing)");

    std::vector<int> sel(order.begin(), order.begin() + m);
    std::sort(sel.begin(), sel.end());

    Eigen::MatrixXcd z(m, m);
    Eigen::VectorXd lambda(m);
    for (int k = 0; k < m; ++k) {
        lambda[k] = vals[sel[k]];
        for (int i = 0; i < m; ++i) z(i, k) = vecs(sub_rows[i], sel[k]);
    }

    // (ZZ+)^(-1/2) Z is unitary, so the block carries exactly the assigned
    // eigenvalues.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> overlap(z * z.adjoint());
    if (overlap.eigenvalues().minCoeff() < 1e-12)
        throw NumericError("ebd_la: subspace overlap is rank-deficient; the assigned "
                           "eigenvectors do not span the subspace");
    Eigen::MatrixXcd inv_sqrt =
        overlap.eigenvectors() *
        overlap.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
        overlap.eigenvectors().adjoint();
    Eigen::MatrixXcd w = inv_sqrt * z;

    EffectiveModel out;
    out.basis_labels = subspace_labels;
    out.h_eff_rad = w * lambda.asDiagonal() * w.adjoint();
    out.method = EffectiveMethod::EbdLa;
    return out;
}

std::vector<std::pair<int, double>> sew_scaling(int max_connectors, double g_mhz,
                                                double delta_mhz) {
    if (max_connectors < 1) throw ValidationError("sew_scaling: need at least one connector");
    if (delta_mhz == 0.0) throw ValidationError("sew_scaling: zero detuning");

    std::vector<std::pair<int, double>> out;
    for (int nc = 1; nc <= max_connectors; ++nc) {
        const int n = nc + 2;
        // Single-excitation chain, nodes at 0, connectors at -Delta.
        Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i + 1 < n; ++i) mat(i, i) = to_angular(-delta_mhz);
        for (int i = 0; i + 1 < n; ++i) {
            mat(i, i + 1) = to_angular(g_mhz);
            mat(i + 1, i) = to_angular(g_mhz);
        }
        HamiltonianMatrix h;
        h.matrix = std::move(mat);
        h.kind = HamiltonianKind::SingleExcitation;
        for (int j = 0; j < n; ++j) h.labels.push_back(one_hot_label(n, j));

        auto model = ebd_la(h, {h.labels.front(), h.labels.back()});
        out.emplace_back(nc, model.g_tilde_mhz()(0, 1));
    }
    return out;
}

} // namespace weave
