#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "permstat/coding.hpp"
#include "permstat/cycles.hpp"
#include "permstat/distribution.hpp"
#include "permstat/error.hpp"
#include "permstat/stat_registry.hpp"
#include "permstat/verify.hpp"

namespace permstat::cli {

namespace {

using json = nlohmann::ordered_json;

struct IntRange {
    int first = 0;
    int last = 0;
};

int parse_int(std::string_view text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("malformed integer '" + std::string(text) + "'");
    }
    return v;
}

// "4" or "2..7"
IntRange parse_range(std::string_view text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    IntRange r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
    if (r.first > r.last) throw ParseError("empty range '" + std::string(text) + "'");
    return r;
}

std::vector<std::string> split_names(std::string_view text) {
    std::vector<std::string> out;
    while (true) {
        const std::size_t comma = text.find(',');
        out.emplace_back(text.substr(0, comma));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

struct Options {
    bool json = false;
    unsigned threads = 0;
    std::optional<int> cap;

    // stat / bij / code
    std::string perm;
    std::string stats;
    std::string map;
    std::string action;
    std::string input;
    std::optional<int> k;

    // dist / verify
    int n = 0;
    std::string n_range;
    std::string k_range;
    std::string domain = "perms";
    std::string vars;
    std::string identity;
};

EngineOptions engine_options(const Options& o) {
    EngineOptions e;
    if (o.cap) e.max_n = *o.cap;
    e.threads = o.threads;
    return e;
}

int cmd_stat(const Options& o, std::ostream& out) {
    const Permutation sigma = parse_permutation(o.perm);
    const auto stats = parse_stat_list(o.stats);
    json values = json::object();
    for (const auto& s : stats) {
        const long long v = evaluate(s, sigma);
        if (o.json) {
            values[s.name()] = v;
        } else {
            out << s.name() << ' ' << v << '\n';
        }
    }
    if (o.json) out << json{{"perm", to_string(sigma)}, {"stats", values}}.dump() << '\n';
    return kOk;
}

int cmd_bij(const Options& o, std::ostream& out) {
    static const std::vector<std::pair<std::string_view, Permutation (*)(const Permutation&)>> maps{
        {"cycle0", &cycle0},     {"cycle0_inv", &cycle0_inverse}, {"cycleneg1", &cycle_neg1},
        {"cycleneg1_inv", &cycle_neg1_inverse}, {"flip", &flip}, {"prime", &prime},
    };
    auto it = std::find_if(maps.begin(), maps.end(), [&](const auto& m) { return m.first == o.map; });
    if (it == maps.end()) throw UnknownName("unknown map '" + o.map + "'");
    const Permutation sigma = parse_permutation(o.perm);
    const Permutation image = it->second(sigma);
    if (o.json) {
        out << json{{"map", o.map}, {"input", to_string(sigma)}, {"output", to_string(image)}}.dump() << '\n';
    } else {
        out << to_string(image) << '\n';
    }
    return kOk;
}

int cmd_code(const Options& o, std::ostream& out) {
    auto need_k = [&] {
        if (!o.k) throw ParseError("action '" + o.action + "' requires --k");
        if (*o.k < 1) throw ParseError("--k must be >= 1");
        return *o.k;
    };
    std::string result;
    if (o.action == "inv-encode") {
        result = to_string(inv_encode(parse_permutation(o.input)));
    } else if (o.action == "inv-decode") {
        result = to_string(inv_decode(parse_code(o.input)));
    } else if (o.action == "maj-encode") {
        const int k = need_k();
        result = to_string(maj_encode(parse_permutation(o.input), k));
    } else if (o.action == "maj-decode") {
        const int k = need_k();
        result = to_string(maj_decode(parse_code(o.input), k));
    } else {
        throw UnknownName("unknown code action '" + o.action + "'");
    }
    if (o.json) {
        json doc{{"action", o.action}, {"input", o.input}};
        if (o.k && o.action.rfind("maj-", 0) == 0) doc["k"] = *o.k;
        doc["output"] = result;
        out << doc.dump() << '\n';
    } else {
        out << result << '\n';
    }
    return kOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
    const auto stats = parse_stat_list(o.stats);
    const Domain domain = parse_domain(o.domain);
    std::vector<std::string> vars;
    if (!o.vars.empty()) vars = split_names(o.vars);
    if (!vars.empty() && vars.size() != stats.size()) {
        throw ParseError("--vars names " + std::to_string(vars.size()) + " variables for " +
                         std::to_string(stats.size()) + " statistics");
    }
    for (const auto& s : stats) {
        if (s.domain() != domain) {
            throw ParseError("statistic '" + s.name() + "' is not defined on the " + std::string(to_string(domain)) +
                             " domain");
        }
    }
    const DistPolynomial p = distribution(o.n, stats, domain, engine_options(o), std::move(vars));
    out << (o.json ? to_json(p) + "\n" : to_text(p));
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const IdentityInfo& info = find_identity(o.identity);
    const IntRange ns = parse_range(o.n_range);
    std::vector<std::optional<int>> ks{std::nullopt};
    if (info.takes_k) {
        if (o.k_range.empty()) throw ParseError("identity '" + o.identity + "' requires --k");
        const IntRange kr = parse_range(o.k_range);
        if (kr.first < 1) throw ParseError("--k values must be >= 1");
        ks.clear();
        for (int k = kr.first; k <= kr.last; ++k) ks.push_back(k);
    }
    const EngineOptions engine = engine_options(o);
    for (int n = ns.first; n <= ns.last; ++n) check_size(n, engine);

    bool all_passed = true;
    for (int n = ns.first; n <= ns.last; ++n) {
        for (const auto& k : ks) {
            const VerificationReport report = verify(o.identity, n, k, engine);
            all_passed = all_passed && report.passed;
            out << (o.json ? to_json(report) : to_line(report)) << '\n';
        }
    }
    return all_passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation statistics, bijections and exhaustive distribution checks", "permstat"};
    app.require_subcommand(1, 1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON documents instead of plain text");
    app.add_option("--threads", o.threads, "Worker threads for dist/verify (0 = hardware concurrency)");
    app.add_option("--cap", o.cap, "Largest permitted n (default 11, or PERMSTAT_CAP)");

    auto* stat = app.add_subcommand("stat", "Evaluate statistics of one permutation")->fallthrough();
    stat->add_option("perm", o.perm, "Permutation, e.g. \"3 1 4 2\" or 3142")->required();
    stat->add_option("--stats", o.stats, "Comma-separated statistic names, k as name:k")->required();

    auto* bij = app.add_subcommand("bij", "Apply a bijection")->fallthrough();
    bij->add_option("map", o.map, "cycle0 | cycle0_inv | cycleneg1 | cycleneg1_inv | flip | prime")->required();
    bij->add_option("perm", o.perm, "Permutation")->required();

    auto* code = app.add_subcommand("code", "Encode or decode codes")->fallthrough();
    code->add_option("action", o.action, "inv-encode | inv-decode | maj-encode | maj-decode")->required();
    code->add_option("input", o.input, "Permutation or code such as (0,1,2)")->required();
    code->add_option("--k", o.k, "Parameter of the maj coding scheme");

    auto* dist = app.add_subcommand("dist", "Joint distribution polynomial")->fallthrough();
    dist->add_option("--n", o.n, "Size")->required();
    dist->add_option("--stats", o.stats, "Comma-separated statistic names")->required();
    dist->add_option("--domain", o.domain, "perms | codes");
    dist->add_option("--vars", o.vars, "Comma-separated variable names");

    auto* ver = app.add_subcommand("verify", "Check an identity exhaustively")->fallthrough();
    ver->add_option("identity", o.identity, "Identity name")->required();
    ver->add_option("--n", o.n_range, "Size or range, e.g. 2..7")->required();
    ver->add_option("--k", o.k_range, "Parameter or range, e.g. 1..4");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (stat->parsed()) return cmd_stat(o, out);
        if (bij->parsed()) return cmd_bij(o, out);
        if (code->parsed()) return cmd_code(o, out);
        if (dist->parsed()) return cmd_dist(o, out);
        return cmd_verify(o, out);
    } catch (const InvalidCode& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidCode;
    } catch (const SizeCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kSizeCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
}

}  // namespace permstat::cli
