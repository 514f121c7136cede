#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"
#include "permstat/stat_registry.hpp"

namespace permstat {

inline constexpr int kDefaultSizeCap = 11;

/// kDefaultSizeCap, unless the PERMSTAT_CAP environment variable holds a
/// positive integer.
int default_size_cap();

struct EngineOptions {
    int max_n = default_size_cap();
    /// Worker count; 0 means std::thread::hardware_concurrency().
    unsigned threads = 1;
};

/// Throws SizeCapExceeded if n > options.max_n, InvalidArgument if n < 1.
void check_size(int n, const EngineOptions& options);

/// Writes one exponent per variable for the given permutation.
using PermEvaluator = std::function<void(const Permutation&, std::span<std::int64_t>)>;

/// Joint distribution over S_n of an arbitrary tuple evaluator. The domain
/// is split into rank ranges, each worker accumulates a private partial
/// polynomial, and the partials are summed; the result does not depend on
/// the worker count.
DistPolynomial perm_distribution(int n, std::vector<std::string> variables, const PermEvaluator& evaluate,
                                 const EngineOptions& options = {});

/// Joint distribution of `stats` over S_n or C_n. Variable names default to
/// the statistic names. Throws InvalidArgument if a statistic does not
/// belong to `domain`.
DistPolynomial distribution(int n, std::span<const StatDescriptor> stats, Domain domain,
                            const EngineOptions& options = {}, std::vector<std::string> variables = {});

}  // namespace permstat
