#include "weave/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace weave {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

bool is_finite(double x) { return std::isfinite(x); }

} // namespace

DeviceLattice::DeviceLattice(int rows, int cols, std::vector<TransmonSpec> qubits,
                             std::vector<CouplerSpec> couplers, double g_floor_mhz)
    : rows_(rows), cols_(cols), qubits_(std::move(qubits)),
      couplers_(std::move(couplers)), g_floor_mhz_(g_floor_mhz) {
    require(rows_ > 0 && cols_ > 0, "device: grid dimensions must be positive");
    require(g_floor_mhz_ > 0, "device: g_floor must be positive");
    require(!qubits_.empty(), "device: at least one qubit required");

    cell_to_qubit_.assign(static_cast<size_t>(rows_) * cols_, -1);
    for (size_t i = 0; i < qubits_.size(); ++i) {
        const auto& q = qubits_[i];
        require(q.row >= 0 && q.row < rows_ && q.col >= 0 && q.col < cols_,
                "device: qubit " + std::to_string(i) + " outside the grid");
        require(is_finite(q.omega_mhz) && q.omega_mhz > 0,
                "device: qubit " + std::to_string(i) + " field omega_mhz must be finite and positive");
        require(is_finite(q.alpha_mhz),
                "device: qubit " + std::to_string(i) + " field alpha_mhz must be finite");
        require(q.levels >= 2,
                "device: qubit " + std::to_string(i) + " field levels must be >= 2");
        int& cell = cell_to_qubit_[static_cast<size_t>(q.row) * cols_ + q.col];
        require(cell < 0, "device: two qubits share cell (" + std::to_string(q.row) +
                              "," + std::to_string(q.col) + ")");
        cell = static_cast<int>(i);
    }

    std::vector<std::pair<int, int>> seen;
    for (size_t i = 0; i < couplers_.size(); ++i) {
        const auto& c = couplers_[i];
        const std::string tag = "device: coupler " + std::to_string(i);
        require(c.a >= 0 && c.a < qubit_count() && c.b >= 0 && c.b < qubit_count(),
                tag + " references an unknown qubit");
        require(c.a != c.b, tag + ": endpoints must be distinct");
        const auto& qa = qubits_[c.a];
        const auto& qb = qubits_[c.b];
        const int dist = std::abs(qa.row - qb.row) + std::abs(qa.col - qb.col);
        require(dist == 1, tag + ": endpoints are not lattice-adjacent");
        require(is_finite(c.g_mhz) && is_finite(c.g_max_mhz), tag + ": non-finite strength");
        require(c.g_max_mhz >= 0, tag + ": field g_max_mhz must be nonnegative");
        require(std::abs(c.g_mhz) <= c.g_max_mhz,
                tag + ": field g_mhz exceeds the tunable range [0, g_max]");
        const std::pair<int, int> key(std::min(c.a, c.b), std::max(c.a, c.b));
        require(std::find(seen.begin(), seen.end(), key) == seen.end(),
                tag + ": duplicate coupler on one edge");
        seen.push_back(key);
    }
}

DeviceLattice DeviceLattice::uniform_grid(int rows, int cols, double omega_mhz,
                                          double alpha_mhz, double g_mhz,
                                          double g_max_mhz, int levels,
                                          double g_floor_mhz) {
    std::vector<TransmonSpec> qubits;
    qubits.reserve(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            qubits.push_back({r, c, omega_mhz, alpha_mhz, levels});
    std::vector<CouplerSpec> couplers;
    auto index = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) couplers.push_back({index(r, c), index(r, c + 1), g_mhz, g_max_mhz});
            if (r + 1 < rows) couplers.push_back({index(r, c), index(r + 1, c), g_mhz, g_max_mhz});
        }
    return DeviceLattice(rows, cols, std::move(qubits), std::move(couplers), g_floor_mhz);
}

std::optional<int> DeviceLattice::qubit_at(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) return std::nullopt;
    int q = cell_to_qubit_[static_cast<size_t>(row) * cols_ + col];
    if (q < 0) return std::nullopt;
    return q;
}

const CouplerSpec* DeviceLattice::coupler_between(int a, int b) const {
    for (const auto& c : couplers_)
        if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) return &c;
    return nullptr;
}

std::vector<int> DeviceLattice::grid_neighbors(int q) const {
    const auto& spec = qubits_.at(q);
    std::vector<int> out;
    const int dr[] = {-1, 1, 0, 0};
    const int dc[] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k)
        if (auto n = qubit_at(spec.row + dr[k], spec.col + dc[k])) out.push_back(*n);
    return out;
}

DeviceLattice DeviceLattice::with_qubit_omega(int q, double omega_mhz) const {
    auto qubits = qubits_;
    qubits.at(q).omega_mhz = omega_mhz;
    return DeviceLattice(rows_, cols_, std::move(qubits), couplers_, g_floor_mhz_);
}

DeviceLattice DeviceLattice::with_coupler_g(int a, int b, double g_mhz) const {
    auto couplers = couplers_;
    bool found = false;
    for (auto& c : couplers)
        if ((c.a == a && c.b == b) || (c.a == b && c.b == a)) {
            c.g_mhz = g_mhz;
            found = true;
        }
    require(found, "device: no coupler between " + std::to_string(a) + " and " + std::to_string(b));
    return DeviceLattice(rows_, cols_, qubits_, std::move(couplers), g_floor_mhz_);
}

int TargetGraph::degree(int v) const {
    int d = 0;
    for (int j = 0; j < n(); ++j) d += adjacency(v, j);
    return d;
}

std::vector<std::pair<int, int>> TargetGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (adjacency(i, j) != 0) out.emplace_back(i, j);
    return out;
}

TargetGraph TargetGraph::from_adjacency(Eigen::MatrixXi adjacency) {
    require(adjacency.rows() == adjacency.cols(), "graph: adjacency matrix must be square");
    const int n = static_cast<int>(adjacency.rows());
    for (int i = 0; i < n; ++i) {
        require(adjacency(i, i) == 0, "graph: nonzero diagonal at index " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            require(adjacency(i, j) == 0 || adjacency(i, j) == 1,
                    "graph: non-binary entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            require(adjacency(i, j) == adjacency(j, i),
                    "graph: asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    return TargetGraph{std::move(adjacency)};
}

TargetGraph TargetGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
    for (auto [u, v] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n && u != v, "graph: bad edge");
        a(u, v) = a(v, u) = 1;
    }
    return TargetGraph{std::move(a)};
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << text;
}

template <typename T>
T get_field(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key)) throw ValidationError(ctx + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ValidationError(ctx + ": field '" + key + "': " + e.what());
    }
}

void check_version(const json& j, const std::string& ctx) {
    int v = get_field<int>(j, "version", ctx);
    if (v != 1) throw ValidationError(ctx + ": unsupported version " + std::to_string(v));
}

} // namespace

json device_to_json(const DeviceLattice& d);

DeviceLattice device_from_json(const json& j) {
    check_version(j, "device");
    int rows = get_field<int>(j, "rows", "device");
    int cols = get_field<int>(j, "cols", "device");
    double g_floor = get_field<double>(j, "g_floor_mhz", "device");
    std::vector<TransmonSpec> qubits;
    for (const auto& q : get_field<json>(j, "qubits", "device")) {
        TransmonSpec t;
        t.row = get_field<int>(q, "row", "device.qubits");
        t.col = get_field<int>(q, "col", "device.qubits");
        t.omega_mhz = get_field<double>(q, "omega_mhz", "device.qubits");
        t.alpha_mhz = get_field<double>(q, "alpha_mhz", "device.qubits");
        t.levels = q.contains("levels") ? get_field<int>(q, "levels", "device.qubits") : 3;
        qubits.push_back(t);
    }
    std::vector<CouplerSpec> couplers;
    for (const auto& c : get_field<json>(j, "couplers", "device")) {
        CouplerSpec s;
        s.a = get_field<int>(c, "a", "device.couplers");
        s.b = get_field<int>(c, "b", "device.couplers");
        s.g_mhz = get_field<double>(c, "g_mhz", "device.couplers");
        s.g_max_mhz = get_field<double>(c, "g_max_mhz", "device.couplers");
        couplers.push_back(s);
    }
    return DeviceLattice(rows, cols, std::move(qubits), std::move(couplers), g_floor);
}

json device_to_json(const DeviceLattice& d) {
    json qubits = json::array();
    for (const auto& q : d.qubits())
        qubits.push_back({{"row", q.row},
                          {"col", q.col},
                          {"omega_mhz", q.omega_mhz},
                          {"alpha_mhz", q.alpha_mhz},
                          {"levels", q.levels}});
    json couplers = json::array();
    for (const auto& c : d.couplers())
        couplers.push_back({{"a", c.a}, {"b", c.b}, {"g_mhz", c.g_mhz}, {"g_max_mhz", c.g_max_mhz}});
    return json{{"version", 1},
                {"rows", d.rows()},
                {"cols", d.cols()},
                {"g_floor_mhz", d.g_floor_mhz()},
                {"qubits", qubits},
                {"couplers", couplers}};
}

DeviceLattice load_device(const std::string& path) { return device_from_json(parse_file(path)); }

std::string device_to_json_string(const DeviceLattice& device) {
    return device_to_json(device).dump(2) + "\n";
}

DeviceLattice device_from_json_string(const std::string& text) {
    try {
        return device_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("device: ") + e.what());
    }
}

void save_device(const DeviceLattice& device, const std::string& path) {
    write_file(path, device_to_json_string(device));
}

TargetGraph graph_from_json(const json& j) {
    check_version(j, "graph");
    const json& m = get_field<json>(j, "adjacency", "graph");
    if (!m.is_array()) throw ValidationError("graph: adjacency must be an array of rows");
    const int n = static_cast<int>(m.size());
    Eigen::MatrixXi a(n, n);
    for (int i = 0; i < n; ++i) {
        if (!m[i].is_array() || static_cast<int>(m[i].size()) != n)
            throw ValidationError("graph: adjacency matrix must be square (row " + std::to_string(i) + ")");
        for (int k = 0; k < n; ++k) {
            if (!m[i][k].is_number_integer())
                throw ValidationError("graph: non-integer entry at (" + std::to_string(i) + "," +
                                      std::to_string(k) + ")");
            a(i, k) = m[i][k].get<int>();
        }
    }
    return TargetGraph::from_adjacency(std::move(a));
}

json graph_to_json(const TargetGraph& g) {
    json rows = json::array();
    for (int i = 0; i < g.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.n(); ++j) row.push_back(g.adjacency(i, j));
        rows.push_back(std::move(row));
    }
    return json{{"version", 1}, {"adjacency", rows}};
}

TargetGraph load_graph(const std::string& path) { return graph_from_json(parse_file(path)); }

std::string graph_to_json_string(const TargetGraph& graph) {
    return graph_to_json(graph).dump(2) + "\n";
}

TargetGraph graph_from_json_string(const std::string& text) {
    try {
        return graph_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("graph: ") + e.what());
    }
}

void save_graph(const TargetGraph& graph, const std::string& path) {
    write_file(path, graph_to_json_string(graph));
}

} // namespace weave
