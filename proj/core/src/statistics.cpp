#include "permstat/statistics.hpp"

#include <numeric>
#include <string>

#include "permstat/error.hpp"

namespace permstat {

namespace {

void require_k(int k) {
    if (k < 1) throw InvalidArgument("statistic parameter k must be >= 1, got " + std::to_string(k));
}

template <typename Pred>
std::vector<int> adjacent_positions(const Permutation& sigma, Pred pred) {
    std::vector<int> out;
    for (int i = 1; i < sigma.size(); ++i) {
        if (pred(sigma(i), sigma(i + 1))) out.push_back(i);
    }
    return out;
}

int position_sum(const std::vector<int>& positions) { return std::accumulate(positions.begin(), positions.end(), 0); }

}  // namespace

std::vector<int> des_set(const Permutation& sigma) { return des_k_set(sigma, 1); }
int des(const Permutation& sigma) { return des_k(sigma, 1); }
int maj(const Permutation& sigma) { return maj_k(sigma, 1); }

std::vector<int> asc_set(const Permutation& sigma) {
    return adjacent_positions(sigma, [](int a, int b) { return a < b; });
}
int asc(const Permutation& sigma) { return static_cast<int>(asc_set(sigma).size()); }
int amaj(const Permutation& sigma) { return position_sum(asc_set(sigma)); }

int inv(const Permutation& sigma) {
    const int n = sigma.size();
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) count += sigma(i) > sigma(j) ? 1 : 0;
    }
    return count;
}

int exc_k(const Permutation& sigma, int k) {
    require_k(k);
    int count = 0;
    for (int i = 1; i <= sigma.size(); ++i) count += sigma(i) >= i + k ? 1 : 0;
    return count;
}

int exc(const Permutation& sigma) { return exc_k(sigma, 1); }

int unexc(const Permutation& sigma) {
    int count = 0;
    for (int i = 1; i <= sigma.size(); ++i) count += sigma(i) < i ? 1 : 0;
    return count;
}

std::vector<int> des_k_set(const Permutation& sigma, int k) {
    require_k(k);
    return adjacent_positions(sigma, [k](int a, int b) { return a >= b + k; });
}

int des_k(const Permutation& sigma, int k) { return static_cast<int>(des_k_set(sigma, k).size()); }
int maj_k(const Permutation& sigma, int k) { return position_sum(des_k_set(sigma, k)); }

int destilde_k(const Permutation& sigma, int k) {
    const int n = sigma.size();
    return des_k(sigma, k) + (sigma(1) > n + 1 - k ? 0 : 1);
}

int bdestilde_k(const Permutation& sigma, int k) {
    return des_k(sigma, k) + (sigma(sigma.size()) < k ? 0 : 1);
}

int majhat_k(const Permutation& sigma, int k) {
    const int n = sigma.size();
    int close_pairs = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (sigma(i) < sigma(j) && sigma(j) < sigma(i) + k) ++close_pairs;
        }
    }
    return maj_k(sigma, k) + close_pairs;
}

int cover(const Permutation& sigma) {
    const int n = sigma.size();
    const Permutation pos = inverse(sigma);
    int count = 0;
    for (int i = 1; i < n; ++i) count += pos(i + 1) > pos(i) + 1 ? 1 : 0;
    return count + (sigma(1) == 1 ? 0 : 1);
}

std::vector<int> asc2_set(const Permutation& sigma) {
    return adjacent_positions(sigma, [](int a, int b) { return a < b - 1; });
}
int asc2(const Permutation& sigma) { return static_cast<int>(asc2_set(sigma).size()); }
int amaj2(const Permutation& sigma) { return position_sum(asc2_set(sigma)); }
int asctilde2(const Permutation& sigma) { return asc2(sigma) + (sigma(1) == 1 ? 0 : 1); }

int maj_minus_exc(const Permutation& sigma) { return maj(sigma) - exc(sigma); }

}  // namespace permstat
