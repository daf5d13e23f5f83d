#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weave/errors.hpp"

namespace weave {

/// Product basis |n_1 ... n_N> with n_i < levels, enumerated in lexicographic
/// order of (n_1, ..., n_N) (n_1 most significant). Optionally restricted to
/// a fixed total excitation number, keeping the same relative order.
class FockSpace {
public:
    static FockSpace full(int sites, int levels);
    static FockSpace restricted(int sites, int levels, int total_excitation);

    int sites() const { return sites_; }
    int levels() const { return levels_; }
    std::optional<int> total_excitation() const { return total_excitation_; }
    int dimension() const { return static_cast<int>(states_.size()); }

    const std::vector<std::vector<int>>& states() const { return states_; }
    const std::vector<int>& state(int index) const { return states_.at(index); }

    /// Occupation digits concatenated, e.g. |100> -> "100".
    std::string label(int index) const;
    int index_of_label(const std::string& label) const;
    std::optional<int> index_of(const std::vector<int>& occupations) const;

private:
    FockSpace(int sites, int levels, std::optional<int> total_excitation);

    int sites_;
    int levels_;
    std::optional<int> total_excitation_;
    std::vector<std::vector<int>> states_;
};

} // namespace weave
