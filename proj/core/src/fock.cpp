#include "weave/fock.hpp"

#include <numeric>

namespace weave {

FockSpace::FockSpace(int sites, int levels, std::optional<int> total_excitation)
    : sites_(sites), levels_(levels), total_excitation_(total_excitation) {
    if (sites_ < 1) throw ValidationError("fock: site count must be >= 1");
    if (levels_ < 2) throw ValidationError("fock: levels must be >= 2 (got " + std::to_string(levels_) + ")");
    if (levels_ > 10) throw ValidationError("fock: levels > 10 not supported by the digit labels");
    if (total_excitation_ && *total_excitation_ < 0)
        throw ValidationError("fock: total excitation must be nonnegative");

    // Counting in base `levels` with n_1 most significant yields the
    // lexicographic order directly.
    std::vector<int> occ(sites_, 0);
    while (true) {
        const int total = std::accumulate(occ.begin(), occ.end(), 0);
        if (!total_excitation_ || total == *total_excitation_) states_.push_back(occ);
        int i = sites_ - 1;
        while (i >= 0 && occ[i] == levels_ - 1) occ[i--] = 0;
        if (i < 0) break;
        ++occ[i];
    }
    if (states_.empty())
        throw ValidationError("fock: restriction leaves an empty basis");
}

FockSpace FockSpace::full(int sites, int levels) { return FockSpace(sites, levels, std::nullopt); }

FockSpace FockSpace::restricted(int sites, int levels, int total_excitation) {
    return FockSpace(sites, levels, total_excitation);
}

std::string FockSpace::label(int index) const {
    const auto& occ = states_.at(index);
    std::string s;
    s.reserve(occ.size());
    for (int n : occ) s.push_back(static_cast<char>('0' + n));
    return s;
}

int FockSpace::index_of_label(const std::string& label) const {
    if (static_cast<int>(label.size()) != sites_)
        throw ValidationError("fock: label '" + label + "' has wrong length for " +
                              std::to_string(sites_) + " sites");
    std::vector<int> occ(sites_);
    for (int i = 0; i < sites_; ++i) {
        const char c = label[i];
        if (c < '0' || c > '9')
            throw ValidationError("fock: label '" + label + "' contains a non-digit");
        occ[i] = c - '0';
    }
    auto idx = index_of(occ);
    if (!idx) throw ValidationError("fock: state '" + label + "' is not in this basis");
    return *idx;
}

std::optional<int> FockSpace::index_of(const std::vector<int>& occupations) const {
    if (static_cast<int>(occupations.size()) != sites_) return std::nullopt;
    for (int n : occupations)
        if (n < 0 || n >= levels_) return std::nullopt;
    // Lexicographic order makes the state list sorted; binary search suffices.
    auto it = std::lower_bound(states_.begin(), states_.end(), occupations);
    if (it == states_.end() || *it != occupations) return std::nullopt;
    return static_cast<int>(it - states_.begin());
}

} // namespace weave
