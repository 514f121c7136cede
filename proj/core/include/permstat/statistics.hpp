#pragma once

#include <vector>

#include "permstat/permutation.hpp"

// Permutation statistics. A descent is a position i in [n-1] with
// s(i) > s(i+1); a k-descent requires s(i) >= s(i+1) + k. Every statistic
// taking k requires k >= 1 and throws InvalidArgument otherwise.

namespace permstat {

std::vector<int> des_set(const Permutation& sigma);
int des(const Permutation& sigma);
int maj(const Permutation& sigma);

std::vector<int> asc_set(const Permutation& sigma);
int asc(const Permutation& sigma);
int amaj(const Permutation& sigma);

int inv(const Permutation& sigma);

/// #{i : s(i) >= i + k}
int exc_k(const Permutation& sigma, int k);
int exc(const Permutation& sigma);
/// #{i : s(i) < i}
int unexc(const Permutation& sigma);

std::vector<int> des_k_set(const Permutation& sigma, int k);
int des_k(const Permutation& sigma, int k);
int maj_k(const Permutation& sigma, int k);

/// des_k, plus one unless s(1) > n + 1 - k.
int destilde_k(const Permutation& sigma, int k);
/// des_k, plus one unless s(n) < k.
int bdestilde_k(const Permutation& sigma, int k);

/// maj_k plus the number of pairs i < j with s(i) < s(j) < s(i) + k.
int majhat_k(const Permutation& sigma, int k);

/// #{i in [n-1] : s^{-1}(i+1) > s^{-1}(i) + 1}, plus one unless s(1) = 1.
int cover(const Permutation& sigma);

/// Positions with s(i) < s(i+1) - 1.
std::vector<int> asc2_set(const Permutation& sigma);
int asc2(const Permutation& sigma);
int amaj2(const Permutation& sigma);
/// asc2, plus one unless s(1) = 1.
int asctilde2(const Permutation& sigma);

int maj_minus_exc(const Permutation& sigma);

}  // namespace permstat
