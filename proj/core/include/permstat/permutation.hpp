#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions and values are 1-indexed at every interface: `p(i)` is the
/// value at position i. Construction validates that the entries form a
/// bijection, so every live `Permutation` is well formed.
class Permutation {
public:
    /// Throws InvalidArgument unless `one_line` is a rearrangement of 1..n, n >= 1.
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    /// n n-1 ... 1
    static Permutation reversal(int n);

    int size() const noexcept { return static_cast<int>(values_.size()); }

    /// Value at 1-indexed position i.
    int operator()(int i) const noexcept { return values_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> values() const noexcept { return values_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

Permutation inverse(const Permutation& sigma);

/// flip(s)(i) = n+1 - s(n+1-i). An involution.
Permutation flip(const Permutation& sigma);

/// prime(s)(i) = n+1 - s^{-1}(i).
Permutation prime(const Permutation& sigma);

/// Deletes the entry 1 and decrements the rest. Requires n >= 2.
Permutation cut(const Permutation& sigma);

/// Increments every entry and places 1 at `position`, so the result has
/// size n+1 and result(position) = 1. Valid positions are 1..n+1; a
/// permutation of size n-1 therefore accepts positions 1..n.
Permutation insert(const Permutation& sigma, int position);

/// Accepts "3 1 4 2" (whitespace separated) or "3142" (digits, n <= 9).
/// Throws ParseError naming the offending token.
Permutation parse_permutation(std::string_view text);

/// Always the spaced form: "3 1 4 2".
std::string to_string(const Permutation& sigma);

}  // namespace permstat
