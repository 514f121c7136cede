#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>

#include "permstat/error.hpp"

namespace permstat {

namespace {

// The first entry that breaks bijectivity onto 1..n, if any.
std::optional<int> first_invalid_entry(std::span<const int> values) {
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return v;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return std::nullopt;
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    if (values_.empty()) throw InvalidArgument("permutation must have at least one entry");
    if (auto bad = first_invalid_entry(values_)) {
        throw InvalidArgument("not a permutation of 1.." + std::to_string(values_.size()) + ": entry " +
                              std::to_string(*bad));
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.rbegin(), v.rend(), 1);
    return Permutation(std::move(v));
}

Permutation inverse(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(sigma(i) - 1)] = i;
    return Permutation(std::move(out));
}

Permutation flip(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - sigma(n + 1 - i);
    return Permutation(std::move(out));
}

Permutation prime(const Permutation& sigma) {
    const int n = sigma.size();
    const Permutation inv = inverse(sigma);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = n + 1 - inv(i);
    return Permutation(std::move(out));
}

Permutation cut(const Permutation& sigma) {
    if (sigma.size() < 2) throw InvalidArgument("cut requires a permutation of size at least 2");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(sigma.size() - 1));
    for (int v : sigma.values()) {
        if (v != 1) out.push_back(v - 1);
    }
    return Permutation(std::move(out));
}

Permutation insert(const Permutation& sigma, int position) {
    const int n = sigma.size();
    if (position < 1 || position > n + 1) {
        throw InvalidArgument("insert position " + std::to_string(position) + " outside 1.." + std::to_string(n + 1));
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n + 1; ++i) {
        if (i == position) out.push_back(1);
        if (i <= n) out.push_back(sigma(i) + 1);
    }
    return Permutation(std::move(out));
}

Permutation parse_permutation(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        if (end > pos) tokens.push_back(text.substr(pos, end - pos));
        pos = end;
    }
    if (tokens.empty()) throw ParseError("empty permutation");

    // A single token of two or more characters is the compact digit form.
    if (tokens.size() == 1 && tokens.front().size() > 1) {
        const std::string_view digits = tokens.front();
        tokens.clear();
        for (std::size_t i = 0; i < digits.size(); ++i) tokens.push_back(digits.substr(i, 1));
        if (tokens.size() > 9) throw ParseError("compact form is limited to n <= 9: '" + std::string(digits) + "'");
    }

    std::vector<int> values;
    values.reserve(tokens.size());
    std::vector<bool> seen(tokens.size() + 1, false);
    for (std::string_view tok : tokens) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw ParseError("malformed permutation entry '" + std::string(tok) + "'");
        }
        if (v < 1 || v > static_cast<int>(tokens.size())) {
            throw ParseError("entry '" + std::string(tok) + "' outside 1.." + std::to_string(tokens.size()));
        }
        if (seen[static_cast<std::size_t>(v)]) throw ParseError("repeated entry '" + std::string(tok) + "'");
        seen[static_cast<std::size_t>(v)] = true;
        values.push_back(v);
    }
    return Permutation(std::move(values));
}

std::string to_string(const Permutation& sigma) {
    std::string out;
    for (int v : sigma.values()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

}  // namespace permstat
