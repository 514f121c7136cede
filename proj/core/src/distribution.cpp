#include "permstat/distribution.hpp"

#include <charconv>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <string_view>
#include <thread>

#include "permstat/enumerate.hpp"
#include "permstat/error.hpp"

namespace permstat {

namespace {

// Per-chunk counts never exceed the chunk length, so 64 bits cannot overflow.
using PartialCounts = std::map<Exponents, std::uint64_t>;

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void bump(PartialCounts& counts, const Exponents& key) {
    if (auto it = counts.find(key); it != counts.end()) {
        ++it->second;
    } else {
        counts.emplace(key, 1);
    }
}

// Runs `fill(range, counts)` over a partition of [0, n!) and sums the partials.
template <typename Fill>
DistPolynomial accumulate(int n, std::vector<std::string> variables, const EngineOptions& options, Fill fill) {
    check_size(n, options);
    const auto ranges = partition_ranks(factorial(n), resolve_threads(options.threads));
    std::vector<PartialCounts> partials(ranges.size());

    if (ranges.size() <= 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i) fill(ranges[i], partials[i]);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mutex;
        {
            std::vector<std::jthread> workers;
            workers.reserve(ranges.size());
            for (std::size_t i = 0; i < ranges.size(); ++i) {
                workers.emplace_back([&, i] {
                    try {
                        fill(ranges[i], partials[i]);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                });
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    DistPolynomial result(std::move(variables));
    for (const auto& partial : partials) {
        for (const auto& [e, count] : partial) result.add(e, Coefficient(count));
    }
    return result;
}

}  // namespace

int default_size_cap() {
    if (const char* env = std::getenv("PERMSTAT_CAP")) {
        const std::string_view text(env);
        int cap = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec == std::errc{} && ptr == text.data() + text.size() && cap > 0) return cap;
    }
    return kDefaultSizeCap;
}

void check_size(int n, const EngineOptions& options) {
    if (n < 1) throw InvalidArgument("size n must be >= 1, got " + std::to_string(n));
    if (n > options.max_n) {
        throw SizeCapExceeded("size n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(options.max_n));
    }
}

DistPolynomial perm_distribution(int n, std::vector<std::string> variables, const PermEvaluator& evaluate,
                                 const EngineOptions& options) {
    const std::size_t arity = variables.size();
    return accumulate(n, std::move(variables), options, [&](RankRange range, PartialCounts& counts) {
        Exponents key(arity);
        for_each_permutation(n, range, [&](Rank, const Permutation& sigma) {
            evaluate(sigma, key);
            bump(counts, key);
        });
    });
}

DistPolynomial distribution(int n, std::span<const StatDescriptor> stats, Domain domain, const EngineOptions& options,
                            std::vector<std::string> variables) {
    for (const auto& s : stats) {
        if (s.domain() != domain) {
            throw InvalidArgument("statistic '" + s.name() + "' is not defined on the " + std::string(to_string(domain)) +
                                  " domain");
        }
    }
    if (variables.empty()) {
        for (const auto& s : stats) variables.push_back(s.name());
    }
    if (variables.size() != stats.size()) {
        throw InvalidArgument("got " + std::to_string(variables.size()) + " variable names for " +
                              std::to_string(stats.size()) + " statistics");
    }

    if (domain == Domain::perms) {
        return perm_distribution(
            n, std::move(variables),
            [stats](const Permutation& sigma, std::span<std::int64_t> out) {
                for (std::size_t i = 0; i < stats.size(); ++i) out[i] = evaluate(stats[i], sigma);
            },
            options);
    }
    return accumulate(n, std::move(variables), options, [&](RankRange range, PartialCounts& counts) {
        Exponents key(stats.size());
        for_each_code(n, range, [&](Rank, const Code& c) {
            for (std::size_t i = 0; i < stats.size(); ++i) key[i] = evaluate(stats[i], c);
            bump(counts, key);
        });
    });
}

}  // namespace permstat
