#pragma once

#include <string>
#include <vector>

#include "weave/dynamics.hpp"
#include "weave/floquet.hpp"

namespace weave {

/// CSV: header "t_us,<label>..." then one row per time sample. Deterministic
/// formatting (17 significant digits) so emitted files are reproducible.
void write_csv(const EvolutionResult& result, const std::string& path);
void write_csv(const ErrorSeries& series, const std::string& path);
void write_csv(const StroboscopicResult& strobo, const std::string& path);

/// Generic sweep table: one row per entry, e.g. scaling-law curves.
struct SweepTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};
void write_csv(const SweepTable& table, const std::string& path);

/// Minimal line-plot renderer; a convenience view of a CSV series, no test
/// contract beyond being well-formed SVG.
std::string svg_line_plot(const std::string& title, const Eigen::VectorXd& x,
                          const std::vector<std::string>& series_labels,
                          const Eigen::MatrixXd& y);
void write_svg(const std::string& title, const Eigen::VectorXd& x,
               const std::vector<std::string>& series_labels, const Eigen::MatrixXd& y,
               const std::string& path);

/// Records every emitted file with the parameters that produced it. The
/// timestamp lives in its own field so the rest of the manifest is
/// byte-reproducible.
class Manifest {
public:
    void add_file(const std::string& path, const std::string& params_json);
    void set_command(const std::string& command) { command_ = command; }
    std::string to_json_string(bool with_timestamp = true) const;
    void write(const std::string& path) const;

private:
    struct Entry {
        std::string file;
        std::string params_json;
    };
    std::string command_;
    std::vector<Entry> entries_;
};

/// $WEAVE_OUT_DIR when set, "." otherwise.
std::string default_output_root();

} // namespace weave
