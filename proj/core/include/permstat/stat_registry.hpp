#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/code.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

enum class Domain { perms, codes };

std::string_view to_string(Domain d);
/// "perms" or "codes"; throws UnknownName otherwise.
Domain parse_domain(std::string_view text);

enum class StatId {
    des,
    asc,
    maj,
    amaj,
    inv,
    exc,
    unexc,
    exc_k,
    des_k,
    destilde_k,
    bdestilde_k,
    maj_k,
    majhat_k,
    cover,
    asc2,
    amaj2,
    asctilde2,
    maj_minus_exc,
    // code statistics
    sum,
    st_k,
};

/// A named statistic, with its parameter when the statistic takes one.
class StatDescriptor {
public:
    /// Throws InvalidArgument if k is supplied for a plain statistic, missing
    /// for a k-statistic, or less than 1.
    explicit StatDescriptor(StatId id, std::optional<int> k = std::nullopt);

    /// "des", "majhat_k:2", ... A k-statistic without its ":k" suffix is an
    /// error. Throws UnknownName or ParseError.
    static StatDescriptor parse(std::string_view text);

    StatId id() const noexcept { return id_; }
    std::optional<int> k() const noexcept { return k_; }
    Domain domain() const noexcept;

    /// Canonical text form, the inverse of parse.
    std::string name() const;

    friend bool operator==(const StatDescriptor&, const StatDescriptor&) = default;

private:
    StatId id_;
    std::optional<int> k_;
};

bool takes_k(StatId id) noexcept;
std::string_view base_name(StatId id) noexcept;
std::span<const StatId> all_stat_ids() noexcept;

/// Throws InvalidArgument when the descriptor belongs to the other domain.
long long evaluate(const StatDescriptor& stat, const Permutation& sigma);
long long evaluate(const StatDescriptor& stat, const Code& c);

/// Comma-separated list, e.g. "des,majhat_k:2".
std::vector<StatDescriptor> parse_stat_list(std::string_view text);

}  // namespace permstat
