#include "permstat/cycles.hpp"

#include <algorithm>

#include "permstat/error.hpp"

namespace permstat {

namespace {

// Cycles of the partial map `next` over vertices 1..n (next[v] in 0..n),
// skipping vertices already visited. Each cycle is written from its maximum
// and the cycles are returned in order of increasing leader.
std::vector<Cycle> leader_ordered_cycles(const std::vector<int>& next, std::vector<bool>& visited) {
    const int n = static_cast<int>(next.size()) - 1;
    std::vector<Cycle> cycles;
    // Scanning by increasing vertex, a cycle is first met at its minimum, so
    // collect first and rotate/sort afterwards.
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        Cycle c;
        int v = start;
        while (!visited[static_cast<std::size_t>(v)]) {
            visited[static_cast<std::size_t>(v)] = true;
            c.push_back(v);
            v = next[static_cast<std::size_t>(v)];
        }
        std::rotate(c.begin(), std::max_element(c.begin(), c.end()), c.end());
        cycles.push_back(std::move(c));
    }
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
    return cycles;
}

// next[v] = the vertex v points to in the edge graph s(i) -> i-1.
std::vector<int> edge_successors(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> next(static_cast<std::size_t>(n + 1), -1);
    for (int i = 1; i <= n; ++i) next[static_cast<std::size_t>(sigma(i))] = i - 1;
    return next;
}

std::vector<int> concatenate(const std::vector<Cycle>& pieces) {
    std::vector<int> out;
    for (const auto& p : pieces) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

std::vector<Cycle> standard_cycle_notation(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> next(static_cast<std::size_t>(n + 1), 0);
    for (int i = 1; i <= n; ++i) next[static_cast<std::size_t>(i)] = sigma(i);
    std::vector<bool> visited(static_cast<std::size_t>(n + 1), false);
    return leader_ordered_cycles(next, visited);
}

std::vector<std::vector<int>> split_at_left_to_right_maxima(std::span<const int> word) {
    std::vector<std::vector<int>> pieces;
    int running_max = 0;
    for (int v : word) {
        if (pieces.empty() || v > running_max) {
            pieces.emplace_back();
            running_max = v;
        }
        pieces.back().push_back(v);
    }
    return pieces;
}

bool CyclePathNotation::well_formed(int n) const {
    std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
    auto mark = [&](int v) {
        if (v < 0 || v > n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
        return true;
    };
    int previous_leader = 0;
    for (const auto& c : cycles) {
        if (c.empty()) return false;
        if (c.front() != *std::max_element(c.begin(), c.end())) return false;
        if (c.front() <= previous_leader || c.front() >= n) return false;
        previous_leader = c.front();
        for (int v : c) {
            if (v == 0 || !mark(v)) return false;
        }
    }
    if (path.size() < 2 || path.front() != n || path.back() != 0) return false;
    for (int v : path) {
        if (!mark(v)) return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

CyclePathNotation cycle_path_notation(const Permutation& sigma) {
    const int n = sigma.size();
    const std::vector<int> next = edge_successors(sigma);
    std::vector<bool> visited(static_cast<std::size_t>(n + 1), false);

    // n has no incoming edge, so walking from n must end at 0.
    CyclePathNotation out;
    for (int v = n; v != 0; v = next[static_cast<std::size_t>(v)]) {
        visited[static_cast<std::size_t>(v)] = true;
        out.path.push_back(v);
    }
    out.path.push_back(0);
    visited[0] = true;
    out.cycles = leader_ordered_cycles(next, visited);
    return out;
}

Permutation cycle0(const Permutation& sigma) {
    return Permutation(concatenate(standard_cycle_notation(inverse(sigma))));
}

Permutation cycle0_inverse(const Permutation& pi) {
    // Each piece is a cycle of s^{-1}: s^{-1}(a_j) = a_{j+1}, wrapping around.
    const int n = pi.size();
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (const auto& piece : split_at_left_to_right_maxima(pi.values())) {
        for (std::size_t j = 0; j < piece.size(); ++j) {
            const int from = piece[j];
            const int to = piece[(j + 1) % piece.size()];
            sigma[static_cast<std::size_t>(to - 1)] = from;
        }
    }
    return Permutation(std::move(sigma));
}

Permutation cycle_neg1(const Permutation& sigma) {
    const CyclePathNotation g = cycle_path_notation(sigma);
    std::vector<int> word = concatenate(g.cycles);
    word.insert(word.end(), g.path.begin(), g.path.end() - 1);
    return Permutation(std::move(word));
}

Permutation cycle_neg1_inverse(const Permutation& pi) {
    const int n = pi.size();
    auto pieces = split_at_left_to_right_maxima(pi.values());
    // The last piece starts at n and is the path once 0 is restored.
    pieces.back().push_back(0);

    // An edge a -> b means s(b + 1) = a.
    std::vector<int> sigma(static_cast<std::size_t>(n));
    auto add_edge = [&](int from, int to) { sigma[static_cast<std::size_t>(to)] = from; };
    for (std::size_t p = 0; p + 1 < pieces.size(); ++p) {
        const auto& cycle = pieces[p];
        for (std::size_t j = 0; j < cycle.size(); ++j) add_edge(cycle[j], cycle[(j + 1) % cycle.size()]);
    }
    const auto& path = pieces.back();
    for (std::size_t j = 0; j + 1 < path.size(); ++j) add_edge(path[j], path[j + 1]);
    return Permutation(std::move(sigma));
}

}  // namespace permstat
