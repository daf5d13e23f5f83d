#include "weave/dynamics.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "weave/units.hpp"

namespace weave {

int EvolutionResult::column_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw ValidationError("evolution: unknown basis label '" + label + "'");
}

namespace {

Eigen::MatrixXd spectral_populations(const Eigen::MatrixXcd& h, int initial,
                                     const Eigen::VectorXd& times) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericError("evolve: eigendecomposition failed");
    const Eigen::MatrixXcd& v = solver.eigenvectors();
    const Eigen::VectorXd& w = solver.eigenvalues();

    // |psi(t)> = V exp(-i w t) V+ |initial>; column `initial` of V+ is enough.
    const Eigen::VectorXcd coeff = v.row(initial).conjugate();
    const int dim = static_cast<int>(h.rows());
    Eigen::MatrixXd pops(times.size(), dim);
    Eigen::VectorXcd phase(dim);
    for (Eigen::Index ti = 0; ti < times.size(); ++ti) {
        for (int k = 0; k < dim; ++k)
            phase[k] = std::polar(1.0, -w[k] * times[ti]) * coeff[k];
        const Eigen::VectorXcd psi = v * phase;
        pops.row(ti) = psi.cwiseAbs2().transpose();
    }
    return pops;
}

} // namespace

EvolutionResult evolve(const HamiltonianMatrix& h, const std::string& initial,
                       const Eigen::VectorXd& times_us) {
    for (Eigen::Index i = 0; i < times_us.size(); ++i) {
        if (times_us[i] < 0 && i == 0)
            throw ValidationError("evolve: negative time in grid");
        if (i > 0 && times_us[i] < times_us[i - 1])
            throw ValidationError("evolve: time grid must be sorted");
    }
    const double scale = std::max(1.0, h.matrix.cwiseAbs().maxCoeff());
    if ((h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw NumericError("evolve: Hamiltonian is not Hermitian");

    const int initial_index = h.index_of_label(initial);
    EvolutionResult out;
    out.times_us = times_us;
    out.populations = spectral_populations(h.matrix, initial_index, times_us);
    out.labels = h.labels;
    out.initial_label = initial;
    out.tag = h.kind == HamiltonianKind::Effective ? ModelTag::Effective : ModelTag::Full;
    return out;
}

namespace {

Eigen::MatrixXd walk_generator(const TargetGraph& graph, std::optional<double> speed) {
    Eigen::MatrixXd a = graph.adjacency.cast<double>();
    if (speed) a *= to_angular(*speed);
    return a;
}

double transfer_probability(const Eigen::MatrixXd& gen, int from, int to, double t) {
    const int n = static_cast<int>(gen.rows());
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw ValidationError("ctqw: vertex out of range");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gen);
    if (solver.info() != Eigen::Success) throw NumericError("ctqw: eigendecomposition failed");
    const auto& v = solver.eigenvectors();
    const auto& w = solver.eigenvalues();
    std::complex<double> amp = 0.0;
    for (int k = 0; k < n; ++k)
        amp += std::polar(1.0, -w[k] * t) * v(to, k) * v(from, k);
    return std::norm(amp);
}

} // namespace

double ctqw_probability(const TargetGraph& graph, int from, int to, double t,
                        std::optional<double> speed_j_mhz) {
    return transfer_probability(walk_generator(graph, speed_j_mhz), from, to, t);
}

double ctqw_probability(const Eigen::MatrixXd& weights, int from, int to, double t,
                        std::optional<double> speed_j_mhz) {
    if (weights.rows() != weights.cols())
        throw ValidationError("ctqw: weight matrix must be square");
    Eigen::MatrixXd gen = (weights + weights.transpose()) / 2.0;
    if ((gen - weights).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, weights.cwiseAbs().maxCoeff()))
        throw ValidationError("ctqw: weight matrix must be symmetric");
    if (speed_j_mhz) gen *= to_angular(*speed_j_mhz);
    return transfer_probability(gen, from, to, t);
}

EvolutionResult ctqw_evolution(const TargetGraph& graph, int from, const Eigen::VectorXd& times,
                               std::optional<double> speed_j_mhz) {
    const int n = graph.n();
    if (from < 0 || from >= n) throw ValidationError("ctqw: vertex out of range");
    Eigen::MatrixXcd gen = walk_generator(graph, speed_j_mhz).cast<std::complex<double>>();

    EvolutionResult out;
    out.times_us = times;
    out.populations = spectral_populations(gen, from, times);
    for (int j = 0; j < n; ++j) out.labels.push_back("v" + std::to_string(j));
    out.initial_label = "v" + std::to_string(from);
    out.tag = ModelTag::Ctqw;
    return out;
}

double ErrorSeries::max_error() const {
    return errors.size() ? errors.cwiseAbs().maxCoeff() : 0.0;
}

ErrorSeries population_error(const EvolutionResult& full, const EvolutionResult& eff,
                             const std::vector<std::pair<std::string, std::string>>& label_map) {
    if (full.times_us.size() != eff.times_us.size() ||
        (full.times_us - eff.times_us).cwiseAbs().maxCoeff() > 1e-12)
        throw ValidationError("population_error: time grids differ");
    if (label_map.size() != eff.labels.size())
        throw ValidationError("population_error: mapping must cover every effective basis state");

    ErrorSeries out;
    out.times_us = full.times_us;
    out.errors.resize(full.times_us.size(), static_cast<Eigen::Index>(label_map.size()));
    for (size_t k = 0; k < label_map.size(); ++k) {
        const auto& [eff_label, full_label] = label_map[k];
        const int ce = eff.column_of(eff_label);
        const int cf = full.column_of(full_label);
        out.errors.col(static_cast<Eigen::Index>(k)) =
            (full.populations.col(cf) - eff.populations.col(ce)).cwiseAbs();
        out.labels.push_back(full_label);
    }
    return out;
}

bool WalkSpeedReport::any_flagged() const {
    for (const auto& e : edges)
        if (e.flagged) return true;
    return false;
}

double WalkSpeedReport::max_deviation() const {
    double m = 0.0;
    for (const auto& e : edges) m = std::max(m, e.relative_deviation);
    return m;
}

WalkSpeedReport compare_walkspeed(const EffectiveModel& model, WalkSpeed j, double tolerance) {
    if (j.j_mhz <= 0) throw ValidationError("compare_walkspeed: walk speed must be positive");
    WalkSpeedReport report;
    report.tolerance = tolerance;
    const Eigen::MatrixXd g = model.g_tilde_mhz();
    for (int a = 0; a < model.dimension(); ++a)
        for (int b = a + 1; b < model.dimension(); ++b) {
            if (g(a, b) == 0.0) continue;
            WalkSpeedReport::Edge e;
            e.a = model.basis_labels[a];
            e.b = model.basis_labels[b];
            e.g_tilde_mhz = g(a, b);
            e.relative_deviation = std::abs((std::abs(g(a, b)) - j.j_mhz) / j.j_mhz);
            e.flagged = e.relative_deviation > tolerance;
            report.edges.push_back(e);
        }
    return report;
}

} // namespace weave
