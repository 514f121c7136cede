#pragma once

#include <vector>

#include "permstat/code.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

/// c(i) = #{j : j > s^{-1}(i), s(j) < i}; the entries sum to inv(s).
Code inv_encode(const Permutation& sigma);

/// Builds the permutation by inserting value i at the c(i)-th slot counted
/// from the end.
Permutation inv_decode(const Code& c);

/// Insertion positions for the entry 1 into a permutation of size n-1.
///
/// `a_set` holds the positions (within 1..n) at which inserting 1 leaves the
/// tracked descent statistic unchanged. `sequence` lists `a_set` in
/// decreasing order and then the remaining positions in increasing order;
/// inserting at `sequence[j]` raises majhat_k by exactly j.
struct InsertProfile {
    std::vector<int> a_set;  // ascending
    std::vector<int> sequence;

    bool contains(int position) const;
};

/// A_k(s) = {1} u {i in 2..n : (i <= n-1 and s(i-1) >= s(i) + k) or s(i-1) < k}
/// for s of size n-1.
InsertProfile a_profile(const Permutation& sigma, int k);

/// The set tracking destilde_m (m = k+1 >= 2): A_m(s), with the position 1
/// dropped when s(1) > (n-1) - k. Its size is destilde_m(s) + k whenever
/// s has size at least k. Since 1 is the least element of A_m(s), the
/// sequence coincides with that of A_m(s) either way.
InsertProfile a_tilde_profile(const Permutation& sigma, int m);

/// majhat_k(insert(s, i)) - majhat_k(s) through the closed form
/// |A_k(s) n {i+1..n}| + (i in A_k(s) ? 0 : i - 1).
int insert_delta(const Permutation& sigma, int position, int k);

/// Cuts s down to the single-entry permutation and records, at each length
/// i >= 2, how much majhat_k dropped. Sum of entries is majhat_k(s) and
/// st_k of the result is des_k(s).
Code maj_encode(const Permutation& sigma, int k);

/// Inverse of maj_encode: grows from the single-entry permutation by
/// inserting 1 at a_{c(i)} of the current insert profile.
Permutation maj_decode(const Code& c, int k);

}  // namespace permstat
