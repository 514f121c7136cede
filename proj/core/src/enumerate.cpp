#include "permstat/enumerate.hpp"

#include <limits>
#include <string>

#include "permstat/coding.hpp"
#include "permstat/error.hpp"

namespace permstat {

namespace {

std::vector<int> digits_of(int n, Rank rank) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        digits[static_cast<std::size_t>(i - 1)] = static_cast<int>(rank % static_cast<Rank>(i));
        rank /= static_cast<Rank>(i);
    }
    return digits;
}

// Mixed-radix increment; c(1) is the least significant digit.
void increment(std::vector<int>& digits) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] <= static_cast<int>(i)) return;
        digits[i] = 0;
    }
}

void check_range(int n, RankRange range) {
    if (n < 1) throw InvalidArgument("domain size must be >= 1");
    const Rank total = factorial(n);
    if (range.begin > range.end || range.end > total) {
        throw InvalidArgument("rank range [" + std::to_string(range.begin) + ", " + std::to_string(range.end) +
                              ") outside [0, " + std::to_string(total) + "]");
    }
}

template <typename Visit>
void walk(int n, RankRange range, Visit&& visit) {
    check_range(n, range);
    if (range.begin == range.end) return;
    std::vector<int> digits = digits_of(n, range.begin);
    for (Rank r = range.begin; r < range.end; ++r) {
        visit(r, Code(digits));
        increment(digits);
    }
}

}  // namespace

Rank factorial(int n) {
    Rank f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > std::numeric_limits<Rank>::max() / static_cast<Rank>(i)) {
            throw InvalidArgument(std::to_string(n) + "! does not fit in 64 bits");
        }
        f *= static_cast<Rank>(i);
    }
    return f;
}

Code code_from_rank(int n, Rank rank) {
    check_range(n, {rank, rank});
    if (rank == factorial(n)) throw InvalidArgument("rank " + std::to_string(rank) + " is past the end");
    return Code(digits_of(n, rank));
}

Rank rank_of_code(const Code& c) {
    Rank rank = 0;
    Rank weight = 1;
    for (int i = 1; i <= c.size(); ++i) {
        rank += static_cast<Rank>(c(i)) * weight;
        weight *= static_cast<Rank>(i);
    }
    return rank;
}

Permutation permutation_from_rank(int n, Rank rank) { return inv_decode(code_from_rank(n, rank)); }

std::vector<RankRange> partition_ranks(Rank total, unsigned parts) {
    if (parts == 0) parts = 1;
    std::vector<RankRange> out;
    const Rank base = total / parts;
    const Rank extra = total % parts;
    Rank begin = 0;
    for (Rank p = 0; p < parts; ++p) {
        const Rank len = base + (p < extra ? 1 : 0);
        if (len == 0) continue;
        out.push_back({begin, begin + len});
        begin += len;
    }
    return out;
}

void for_each_permutation(int n, RankRange range, const std::function<void(Rank, const Permutation&)>& visit) {
    walk(n, range, [&](Rank r, const Code& c) { visit(r, inv_decode(c)); });
}

void for_each_code(int n, RankRange range, const std::function<void(Rank, const Code&)>& visit) {
    walk(n, range, visit);
}

}  // namespace permstat
