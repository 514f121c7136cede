#pragma once

#include <cstdint>
#include <functional>

#include "permstat/code.hpp"
#include "permstat/permutation.hpp"
#include "permstat/stat_registry.hpp"

namespace permstat {

using Rank = std::uint64_t;

/// n!; throws InvalidArgument if it does not fit in 64 bits.
Rank factorial(int n);

/// Factorial number system: rank = sum over i of c(i) * (i-1)!.
Code code_from_rank(int n, Rank rank);
Rank rank_of_code(const Code& c);

/// The element of rank r: the code itself, or its inv_decode.
Permutation permutation_from_rank(int n, Rank rank);

struct RankRange {
    Rank begin = 0;
    Rank end = 0;  // exclusive
};

/// Splits [0, total) into at most `parts` contiguous non-empty ranges of near-equal size.
std::vector<RankRange> partition_ranks(Rank total, unsigned parts);

/// Visits ranks [range.begin, range.end) in increasing order. Throws
/// InvalidArgument if the range is not within [0, n!].
void for_each_permutation(int n, RankRange range, const std::function<void(Rank, const Permutation&)>& visit);
void for_each_code(int n, RankRange range, const std::function<void(Rank, const Code&)>& visit);

}  // namespace permstat
