#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "permstat/distribution.hpp"
#include "permstat/permutation.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {

struct IdentityInfo {
    std::string_view name;
    bool takes_k;
    std::string_view summary;
};

/// The registry of checkable identities, in a fixed order.
std::span<const IdentityInfo> identities() noexcept;
/// Throws UnknownName.
const IdentityInfo& find_identity(std::string_view name);

struct VerificationReport {
    std::string identity;
    int n = 0;
    std::optional<int> k;
    bool passed = false;
    // Per-element identities: the first failing permutation in rank order.
    std::optional<Permutation> counterexample;
    // Distribution identities: the first differing term.
    std::optional<TermMismatch> mismatch;
    std::string detail;
    std::chrono::duration<double> elapsed{};

    bool has_counterexample() const noexcept { return counterexample.has_value() || mismatch.has_value(); }
};

/// Checks the named identity exhaustively at size n. Per-element identities
/// test every permutation of S_n; distribution identities compare the two
/// generating polynomials. Throws UnknownName, InvalidArgument (k missing
/// where required or supplied where not) and SizeCapExceeded.
VerificationReport verify(std::string_view identity, int n, std::optional<int> k = std::nullopt,
                          const EngineOptions& options = {});

/// "prop_ed n=4 pass", with the counterexample appended on failure. Timing is
/// left out so that the line is reproducible.
std::string to_line(const VerificationReport& report);
std::string to_json(const VerificationReport& report);

}  // namespace permstat
