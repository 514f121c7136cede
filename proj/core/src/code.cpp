#include "permstat/code.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "permstat/error.hpp"

namespace permstat {

Code::Code(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const int position = static_cast<int>(i) + 1;
        if (entries_[i] < 0 || entries_[i] >= position) {
            throw InvalidCode("code entry c(" + std::to_string(position) + ") = " + std::to_string(entries_[i]) +
                              " violates 0 <= c(i) < i");
        }
    }
}

Code Code::zero(int n) { return Code(std::vector<int>(static_cast<std::size_t>(n), 0)); }

int code_sum(const Code& c) { return std::accumulate(c.entries().begin(), c.entries().end(), 0); }

int st_k(const Code& c, int k) {
    if (k < 1) throw InvalidArgument("st_k requires k >= 1, got " + std::to_string(k));
    int value = 0;
    for (int i = 2; i <= c.size(); ++i) {
        if (c(i) > value + k - 1) ++value;
    }
    return value;
}

Code parse_code(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
        throw ParseError("code must be written as (c1,c2,...): '" + std::string(text) + "'");
    }
    body = body.substr(1, body.size() - 2);

    std::vector<int> entries;
    while (true) {
        const std::size_t comma = body.find(',');
        const std::string_view tok = trim(body.substr(0, comma));
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw ParseError("malformed code entry '" + std::string(tok) + "'");
        }
        entries.push_back(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return Code(std::move(entries));
}

std::string to_string(const Code& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.entries().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(c.entries()[i]);
    }
    return out + ")";
}

}  // namespace permstat
