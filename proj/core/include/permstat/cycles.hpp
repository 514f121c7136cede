#pragma once

#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

using Cycle = std::vector<int>;

/// Cycle decomposition with each cycle written from its maximum and the
/// cycles ordered by increasing leader. Within a cycle, consecutive entries
/// a, b satisfy s(a) = b, and the last entry maps back to the leader.
std::vector<Cycle> standard_cycle_notation(const Permutation& sigma);

/// Cycles and the n -> 0 path of the graph on {0, ..., n} with an edge
/// s(i) -> i-1 for every position i.
struct CyclePathNotation {
    std::vector<Cycle> cycles;
    std::vector<int> path;  // starts with n, ends with 0

    /// Checks the structural invariants against size n: every vertex of
    /// {0..n} exactly once, cycles led by their maxima with increasing
    /// leaders below n, path from n to 0.
    bool well_formed(int n) const;

    friend bool operator==(const CyclePathNotation&, const CyclePathNotation&) = default;
};

CyclePathNotation cycle_path_notation(const Permutation& sigma);

/// Foata's map: standard cycle notation of s^{-1} with the parentheses
/// erased. Sends exc to des.
Permutation cycle0(const Permutation& sigma);
Permutation cycle0_inverse(const Permutation& pi);

/// Standard cycle-path notation of the edge graph, concatenated, with the
/// trailing 0 dropped. Sends exc_k to bdestilde_{k+1} and unexc to asc.
Permutation cycle_neg1(const Permutation& sigma);
Permutation cycle_neg1_inverse(const Permutation& pi);

/// Splits a word before each left-to-right maximum.
std::vector<std::vector<int>> split_at_left_to_right_maxima(std::span<const int> word);

}  // namespace permstat
