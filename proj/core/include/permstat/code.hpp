#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// A sequence c(1), ..., c(n) with 0 <= c(i) < i. There are n! of length n.
class Code {
public:
    /// Throws InvalidCode if any entry is out of range.
    explicit Code(std::vector<int> entries);

    static Code zero(int n);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int operator()(int i) const noexcept { return entries_[static_cast<std::size_t>(i - 1)]; }
    std::span<const int> entries() const noexcept { return entries_; }

    friend bool operator==(const Code&, const Code&) = default;
    friend auto operator<=>(const Code&, const Code&) = default;

private:
    std::vector<int> entries_;
};

int code_sum(const Code& c);

/// Starts at 0 on the length-1 prefix and increments at step i exactly when
/// c(i) exceeds the running value plus k - 1. st_1 is Skandera's st.
int st_k(const Code& c, int k);

/// "(0,1,2)". Whitespace around entries is tolerated. Throws ParseError on
/// malformed text and InvalidCode on out-of-range entries.
Code parse_code(std::string_view text);
std::string to_string(const Code& c);

}  // namespace permstat
