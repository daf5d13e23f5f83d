#include "weave/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace weave {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write file: " + path);
    return out;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(17);
    s << x;
    return s.str();
}

void write_series_csv(const std::string& path, const std::string& prefix,
                      const Eigen::VectorXd& t, const std::vector<std::string>& labels,
                      const Eigen::MatrixXd& values) {
    auto out = open_out(path);
    out << "t_us";
    for (const auto& l : labels) out << ',' << prefix << l;
    out << '\n';
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        out << fmt(t[i]);
        for (Eigen::Index j = 0; j < values.cols(); ++j) out << ',' << fmt(values(i, j));
        out << '\n';
    }
}

} // namespace

void write_csv(const EvolutionResult& result, const std::string& path) {
    write_series_csv(path, "p_", result.times_us, result.labels, result.populations);
}

void write_csv(const ErrorSeries& series, const std::string& path) {
    write_series_csv(path, "E_", series.times_us, series.labels, series.errors);
}

void write_csv(const StroboscopicResult& strobo, const std::string& path) {
    write_series_csv(path, "p_", strobo.times_us, strobo.labels, strobo.populations);
}

void write_csv(const SweepTable& table, const std::string& path) {
    auto out = open_out(path);
    for (size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

std::string svg_line_plot(const std::string& title, const Eigen::VectorXd& x,
                          const std::vector<std::string>& series_labels,
                          const Eigen::MatrixXd& y) {
    const int width = 720, height = 420, left = 60, bottom = 40, top = 30, right = 20;
    const double x0 = x.minCoeff(), x1 = x.maxCoeff();
    double y0 = y.size() ? y.minCoeff() : 0.0, y1 = y.size() ? y.maxCoeff() : 1.0;
    if (y1 - y0 < 1e-300) y1 = y0 + 1.0;
    const double xs = (width - left - right) / std::max(x1 - x0, 1e-300);
    const double ys = (height - top - bottom) / (y1 - y0);
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << width / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">"
      << title << "</text>\n"
      << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
      << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
    for (Eigen::Index c = 0; c < y.cols(); ++c) {
        s << "<polyline fill=\"none\" stroke=\"" << colors[c % 8] << "\" points=\"";
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            const double px = left + (x[i] - x0) * xs;
            const double py = height - bottom - (y(i, c) - y0) * ys;
            s << px << ',' << py << ' ';
        }
        s << "\"/>\n";
        if (c < static_cast<Eigen::Index>(series_labels.size()))
            s << "<text x=\"" << width - right - 150 << "\" y=\"" << top + 16 * (c + 1)
              << "\" font-size=\"12\" fill=\"" << colors[c % 8] << "\">" << series_labels[c]
              << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

void write_svg(const std::string& title, const Eigen::VectorXd& x,
               const std::vector<std::string>& series_labels, const Eigen::MatrixXd& y,
               const std::string& path) {
    open_out(path) << svg_line_plot(title, x, series_labels, y);
}

void Manifest::add_file(const std::string& path, const std::string& params_json) {
    entries_.push_back({path, params_json});
}

std::string Manifest::to_json_string(bool with_timestamp) const {
    json files = json::array();
    for (const auto& e : entries_) {
        json params;
        try {
            params = json::parse(e.params_json);
        } catch (const json::parse_error&) {
            params = e.params_json;
        }
        files.push_back({{"file", e.file}, {"params", params}});
    }
    json j{{"version", 1}, {"command", command_}, {"files", files}};
    if (with_timestamp) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["timestamp"] = buf;
    }
    return j.dump(2) + "\n";
}

void Manifest::write(const std::string& path) const { open_out(path) << to_json_string(); }

std::string default_output_root() {
    if (const char* env = std::getenv("WEAVE_OUT_DIR"); env && *env) return env;
    return ".";
}

} // namespace weave
