#include "permstat/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "permstat/coding.hpp"
#include "permstat/cycles.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/error.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

constexpr std::array kIdentities{
    IdentityInfo{"prop_ed", false, "(des, cover) ~ (exc, des) over S_n"},
    IdentityInfo{"exc_bdes", true, "exc_k(s) = bdestilde_{k+1}(cycle_neg1(s)) for every s"},
    IdentityInfo{"unexc_asc", false, "unexc(s) = asc(cycle_neg1(s)) for every s"},
    IdentityInfo{"multivar", false, "(unexc, exc_1..exc_4) ~ (asc, destilde_2..destilde_5)"},
    IdentityInfo{"asc_des_symmetry", false, "(asc, destilde_2) ~ (destilde_2, asc)"},
    IdentityInfo{"des_maj_pair", false, "(des, maj) ~ (destilde_2, majhat_2)"},
    IdentityInfo{"pair_k", true, "(des_k, majhat_k) ~ (destilde_{k+1}, majhat_{k+1})"},
    IdentityInfo{"bij_thm_i", true, "sum(maj_encode(s, k)) = majhat_k(s) for every s, and maj_encode is a bijection"},
    IdentityInfo{"bij_thm_ii", true, "st_k(maj_encode(s, k)) = des_k(s) for every s"},
    IdentityInfo{"bij_thm_iii", true, "st_k(maj_encode(s, k+1)) = destilde_{k+1}(s) for every s"},
    IdentityInfo{"code_st", true, "st_k over C_n ~ des_k over S_n"},
    IdentityInfo{"alg_thm", false, "(amaj2, asctilde2, des of inverse) ~ (maj - exc, des, exc) in q, p, t"},
};

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Returns a description of the failure, or an empty string when s passes.
using ElementCheck = std::function<std::string(const Permutation&)>;

struct ElementFailure {
    Rank rank = std::numeric_limits<Rank>::max();
    std::string detail;
};

// First failing rank across the whole of S_n; chunks run concurrently but
// the minimum rank wins, so the answer does not depend on scheduling.
std::optional<ElementFailure> first_failure(int n, const ElementCheck& check, const EngineOptions& options) {
    const auto ranges = partition_ranks(factorial(n), resolve_threads(options.threads));
    std::vector<ElementFailure> found(ranges.size());

    auto scan = [&](std::size_t i) {
        // for_each_permutation has no early exit; stop checking after the first hit.
        bool done = false;
        for_each_permutation(n, ranges[i], [&](Rank r, const Permutation& s) {
            if (done) return;
            if (std::string why = check(s); !why.empty()) {
                found[i] = {r, std::move(why)};
                done = true;
            }
        });
    };

    if (ranges.size() <= 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i) scan(i);
    } else {
        std::exception_ptr error;
        std::mutex error_mutex;
        {
            std::vector<std::jthread> workers;
            for (std::size_t i = 0; i < ranges.size(); ++i) {
                workers.emplace_back([&, i] {
                    try {
                        scan(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                    }
                });
            }
        }
        if (error) std::rethrow_exception(error);
    }

    auto best = std::min_element(found.begin(), found.end(),
                                 [](const ElementFailure& a, const ElementFailure& b) { return a.rank < b.rank; });
    if (best == found.end() || best->rank == std::numeric_limits<Rank>::max()) return std::nullopt;
    return *best;
}

std::string mismatch(const char* what, long long left, long long right) {
    return std::string(what) + ": " + std::to_string(left) + " != " + std::to_string(right);
}

void apply_element_result(VerificationReport& report, int n, const std::optional<ElementFailure>& failure) {
    report.passed = !failure;
    if (failure) {
        report.counterexample = permutation_from_rank(n, failure->rank);
        report.detail = failure->detail;
    }
}

// Per-element clause (i) plus an exhaustive injectivity count of maj_encode.
void check_bijection_clause(VerificationReport& report, int n, int k, const EngineOptions& options) {
    const Rank total = factorial(n);
    std::vector<std::atomic<std::uint8_t>> hit(total);
    std::atomic<bool> collided{false};

    const auto failure = first_failure(
        n,
        [&](const Permutation& s) -> std::string {
            const Code c = maj_encode(s, k);
            if (code_sum(c) != majhat_k(s, k)) return mismatch("sum(maj_encode) vs majhat_k", code_sum(c), majhat_k(s, k));
            if (hit[rank_of_code(c)].exchange(1) != 0) collided = true;
            return {};
        },
        options);
    if (failure) {
        apply_element_result(report, n, failure);
        return;
    }
    if (!collided) {
        report.passed = true;
        report.detail = std::to_string(total) + " distinct codes";
        return;
    }

    // Serial rescan so that the reported collision is the first in rank order.
    std::vector<bool> seen(total, false);
    std::optional<ElementFailure> first;
    for_each_permutation(n, {0, total}, [&](Rank r, const Permutation& s) {
        if (first) return;
        const Code c = maj_encode(s, k);
        const Rank image = rank_of_code(c);
        if (seen[image]) first = ElementFailure{r, "maj_encode image " + to_string(c) + " already taken"};
        seen[image] = true;
    });
    apply_element_result(report, n, first);
}

void compare_sides(VerificationReport& report, const DistPolynomial& left, const DistPolynomial& right) {
    const Comparison cmp = equal_distribution(left, right);
    report.passed = cmp.equal;
    if (!cmp.equal) {
        const TermMismatch& m = *cmp.first_difference;
        report.detail = "term " + to_string(m.exponents) + ": " + m.left.str() + " vs " + m.right.str();
        report.mismatch = m;
    }
}

using Tuple = std::function<void(const Permutation&, std::span<std::int64_t>)>;

void compare_tuples(VerificationReport& report, int n, const std::vector<std::string>& vars, const Tuple& left,
                    const Tuple& right, const EngineOptions& options) {
    compare_sides(report, perm_distribution(n, vars, left, options), perm_distribution(n, vars, right, options));
}

}  // namespace

std::span<const IdentityInfo> identities() noexcept { return kIdentities; }

const IdentityInfo& find_identity(std::string_view name) {
    for (const auto& id : kIdentities) {
        if (id.name == name) return id;
    }
    throw UnknownName("unknown identity '" + std::string(name) + "'");
}

VerificationReport verify(std::string_view identity, int n, std::optional<int> k, const EngineOptions& options) {
    const IdentityInfo& info = find_identity(identity);
    if (info.takes_k && !k) throw InvalidArgument("identity " + std::string(info.name) + " requires k");
    if (!info.takes_k && k) throw InvalidArgument("identity " + std::string(info.name) + " takes no k");
    if (k && *k < 1) throw InvalidArgument("k must be >= 1, got " + std::to_string(*k));
    check_size(n, options);

    VerificationReport report;
    report.identity = std::string(info.name);
    report.n = n;
    report.k = k;
    const auto started = std::chrono::steady_clock::now();
    const int kk = k.value_or(1);

    if (identity == "prop_ed") {
        compare_tuples(
            report, n, {"t", "x"},
            [](const Permutation& s, std::span<std::int64_t> e) { e[0] = des(s), e[1] = cover(s); },
            [](const Permutation& s, std::span<std::int64_t> e) { e[0] = exc(s), e[1] = des(s); }, options);
    } else if (identity == "exc_bdes") {
        apply_element_result(report, n, first_failure(n, [kk](const Permutation& s) -> std::string {
            const int lhs = exc_k(s, kk);
            const int rhs = bdestilde_k(cycle_neg1(s), kk + 1);
            return lhs == rhs ? std::string{} : mismatch("exc_k vs bdestilde_{k+1}", lhs, rhs);
        }, options));
    } else if (identity == "unexc_asc") {
        apply_element_result(report, n, first_failure(n, [](const Permutation& s) -> std::string {
            const int lhs = unexc(s);
            const int rhs = asc(cycle_neg1(s));
            return lhs == rhs ? std::string{} : mismatch("unexc vs asc", lhs, rhs);
        }, options));
    } else if (identity == "multivar") {
        compare_tuples(
            report, n, {"u", "e1", "e2", "e3", "e4"},
            [](const Permutation& s, std::span<std::int64_t> e) {
                e[0] = unexc(s);
                for (int j = 1; j <= 4; ++j) e[static_cast<std::size_t>(j)] = exc_k(s, j);
            },
            [](const Permutation& s, std::span<std::int64_t> e) {
                e[0] = asc(s);
                for (int j = 1; j <= 4; ++j) e[static_cast<std::size_t>(j)] = destilde_k(s, j + 1);
            },
            options);
    } else if (identity == "asc_des_symmetry") {
        compare_tuples(
            report, n, {"x", "y"},
            [](const Permutation& s, std::span<std::int64_t> e) { e[0] = asc(s), e[1] = destilde_k(s, 2); },
            [](const Permutation& s, std::span<std::int64_t> e) { e[0] = destilde_k(s, 2), e[1] = asc(s); }, options);
    } else if (identity == "des_maj_pair") {
        compare_tuples(
            report, n, {"x", "y"},
            [](const Permutation& s, std::span<std::int64_t> e) { e[0] = des(s), e[1] = maj(s); },
            [](const Permutation& s, std::span<std::int64_t> e) { e[0] = destilde_k(s, 2), e[1] = majhat_k(s, 2); },
            options);
    } else if (identity == "pair_k") {
        compare_tuples(
            report, n, {"x", "y"},
            [kk](const Permutation& s, std::span<std::int64_t> e) { e[0] = des_k(s, kk), e[1] = majhat_k(s, kk); },
            [kk](const Permutation& s, std::span<std::int64_t> e) {
                e[0] = destilde_k(s, kk + 1), e[1] = majhat_k(s, kk + 1);
            },
            options);
    } else if (identity == "bij_thm_i") {
        check_bijection_clause(report, n, kk, options);
    } else if (identity == "bij_thm_ii") {
        apply_element_result(report, n, first_failure(n, [kk](const Permutation& s) -> std::string {
            const int lhs = st_k(maj_encode(s, kk), kk);
            const int rhs = des_k(s, kk);
            return lhs == rhs ? std::string{} : mismatch("st_k(maj_encode(s, k)) vs des_k", lhs, rhs);
        }, options));
    } else if (identity == "bij_thm_iii") {
        apply_element_result(report, n, first_failure(n, [kk](const Permutation& s) -> std::string {
            const int lhs = st_k(maj_encode(s, kk + 1), kk);
            const int rhs = destilde_k(s, kk + 1);
            return lhs == rhs ? std::string{} : mismatch("st_k(maj_encode(s, k+1)) vs destilde_{k+1}", lhs, rhs);
        }, options));
    } else if (identity == "code_st") {
        const StatDescriptor st(StatId::st_k, kk);
        const StatDescriptor dk(StatId::des_k, kk);
        compare_sides(report, distribution(n, std::span(&st, 1), Domain::codes, options, {"x"}),
                      distribution(n, std::span(&dk, 1), Domain::perms, options, {"x"}));
    } else if (identity == "alg_thm") {
        compare_tuples(
            report, n, {"q", "p", "t"},
            [](const Permutation& s, std::span<std::int64_t> e) {
                e[0] = amaj2(s), e[1] = asctilde2(s), e[2] = des(inverse(s));
            },
            [](const Permutation& s, std::span<std::int64_t> e) {
                e[0] = maj_minus_exc(s), e[1] = des(s), e[2] = exc(s);
            },
            options);
    }

    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

std::string to_line(const VerificationReport& report) {
    std::ostringstream out;
    out << report.identity << " n=" << report.n;
    if (report.k) out << " k=" << *report.k;
    out << ' ' << (report.passed ? "pass" : "FAIL");
    if (report.counterexample) out << " counterexample=[" << to_string(*report.counterexample) << ']';
    if (!report.detail.empty()) out << " (" << report.detail << ')';
    return out.str();
}

std::string to_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["identity"] = report.identity;
    doc["n"] = report.n;
    doc["k"] = report.k ? nlohmann::ordered_json(*report.k) : nlohmann::ordered_json(nullptr);
    doc["status"] = report.passed ? "pass" : "fail";
    if (report.counterexample) doc["counterexample"] = to_string(*report.counterexample);
    if (report.mismatch) {
        doc["mismatch"] = {{"exp", report.mismatch->exponents},
                           {"left", report.mismatch->left.str()},
                           {"right", report.mismatch->right.str()}};
    }
    if (!report.detail.empty()) doc["detail"] = report.detail;
    return doc.dump();
}

}  // namespace permstat
