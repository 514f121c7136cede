#include "permstat/stat_registry.hpp"

#include <array>
#include <charconv>

#include "permstat/error.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

struct Entry {
    StatId id;
    std::string_view name;
    bool takes_k;
    Domain domain;
};

constexpr std::array kEntries{
    Entry{StatId::des, "des", false, Domain::perms},
    Entry{StatId::asc, "asc", false, Domain::perms},
    Entry{StatId::maj, "maj", false, Domain::perms},
    Entry{StatId::amaj, "amaj", false, Domain::perms},
    Entry{StatId::inv, "inv", false, Domain::perms},
    Entry{StatId::exc, "exc", false, Domain::perms},
    Entry{StatId::unexc, "unexc", false, Domain::perms},
    Entry{StatId::exc_k, "exc_k", true, Domain::perms},
    Entry{StatId::des_k, "des_k", true, Domain::perms},
    Entry{StatId::destilde_k, "destilde_k", true, Domain::perms},
    Entry{StatId::bdestilde_k, "bdestilde_k", true, Domain::perms},
    Entry{StatId::maj_k, "maj_k", true, Domain::perms},
    Entry{StatId::majhat_k, "majhat_k", true, Domain::perms},
    Entry{StatId::cover, "cover", false, Domain::perms},
    Entry{StatId::asc2, "asc2", false, Domain::perms},
    Entry{StatId::amaj2, "amaj2", false, Domain::perms},
    Entry{StatId::asctilde2, "asctilde2", false, Domain::perms},
    Entry{StatId::maj_minus_exc, "maj_minus_exc", false, Domain::perms},
    Entry{StatId::sum, "sum", false, Domain::codes},
    Entry{StatId::st_k, "st_k", true, Domain::codes},
};

constexpr auto kIds = [] {
    std::array<StatId, kEntries.size()> ids{};
    for (std::size_t i = 0; i < kEntries.size(); ++i) ids[i] = kEntries[i].id;
    return ids;
}();

const Entry& entry(StatId id) {
    for (const auto& e : kEntries) {
        if (e.id == id) return e;
    }
    throw UnknownName("unregistered statistic id");
}

}  // namespace

std::string_view to_string(Domain d) { return d == Domain::perms ? "perms" : "codes"; }

Domain parse_domain(std::string_view text) {
    if (text == "perms") return Domain::perms;
    if (text == "codes") return Domain::codes;
    throw UnknownName("unknown domain '" + std::string(text) + "' (expected perms or codes)");
}

bool takes_k(StatId id) noexcept {
    for (const auto& e : kEntries) {
        if (e.id == id) return e.takes_k;
    }
    return false;
}

std::string_view base_name(StatId id) noexcept {
    for (const auto& e : kEntries) {
        if (e.id == id) return e.name;
    }
    return {};
}

std::span<const StatId> all_stat_ids() noexcept { return kIds; }

StatDescriptor::StatDescriptor(StatId id, std::optional<int> k) : id_(id), k_(k) {
    const Entry& e = entry(id);
    if (e.takes_k && !k) throw InvalidArgument("statistic " + std::string(e.name) + " requires a parameter k");
    if (!e.takes_k && k) throw InvalidArgument("statistic " + std::string(e.name) + " takes no parameter");
    if (k && *k < 1) throw InvalidArgument("statistic parameter k must be >= 1, got " + std::to_string(*k));
}

StatDescriptor StatDescriptor::parse(std::string_view text) {
    const std::size_t colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    for (const auto& e : kEntries) {
        if (e.name != head) continue;
        if (colon == std::string_view::npos) {
            if (e.takes_k) throw ParseError("statistic '" + std::string(head) + "' needs a ':k' suffix");
            return StatDescriptor(e.id);
        }
        if (!e.takes_k) throw ParseError("statistic '" + std::string(head) + "' takes no ':k' suffix");
        const std::string_view tail = text.substr(colon + 1);
        int k = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
        if (tail.empty() || ec != std::errc{} || ptr != tail.data() + tail.size() || k < 1) {
            throw ParseError("bad parameter in '" + std::string(text) + "'");
        }
        return StatDescriptor(e.id, k);
    }
    throw UnknownName("unknown statistic '" + std::string(text) + "'");
}

Domain StatDescriptor::domain() const noexcept { return entry(id_).domain; }

std::string StatDescriptor::name() const {
    std::string out(base_name(id_));
    if (k_) out += ":" + std::to_string(*k_);
    return out;
}

long long evaluate(const StatDescriptor& stat, const Permutation& s) {
    const int k = stat.k().value_or(1);
    switch (stat.id()) {
        case StatId::des: return des(s);
        case StatId::asc: return asc(s);
        case StatId::maj: return maj(s);
        case StatId::amaj: return amaj(s);
        case StatId::inv: return inv(s);
        case StatId::exc: return exc(s);
        case StatId::unexc: return unexc(s);
        case StatId::exc_k: return exc_k(s, k);
        case StatId::des_k: return des_k(s, k);
        case StatId::destilde_k: return destilde_k(s, k);
        case StatId::bdestilde_k: return bdestilde_k(s, k);
        case StatId::maj_k: return maj_k(s, k);
        case StatId::majhat_k: return majhat_k(s, k);
        case StatId::cover: return cover(s);
        case StatId::asc2: return asc2(s);
        case StatId::amaj2: return amaj2(s);
        case StatId::asctilde2: return asctilde2(s);
        case StatId::maj_minus_exc: return maj_minus_exc(s);
        case StatId::sum:
        case StatId::st_k: break;
    }
    throw InvalidArgument("code statistic '" + stat.name() + "' applied to a permutation");
}

long long evaluate(const StatDescriptor& stat, const Code& c) {
    switch (stat.id()) {
        case StatId::sum: return code_sum(c);
        case StatId::st_k: return st_k(c, *stat.k());
        default: break;
    }
    throw InvalidArgument("permutation statistic '" + stat.name() + "' applied to a code");
}

std::vector<StatDescriptor> parse_stat_list(std::string_view text) {
    std::vector<StatDescriptor> out;
    while (true) {
        const std::size_t comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        if (item.empty()) throw ParseError("empty statistic name in list");
        out.push_back(StatDescriptor::parse(item));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace permstat
