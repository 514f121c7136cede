// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "permstat/coding.hpp"
#include "permstat/cycles.hpp"
#include "permstat/distribution.hpp"
#include "permstat/enumerate.hpp"
#include "permstat/statistics.hpp"
#include "permstat/verify.hpp"

namespace {

using namespace permstat;
using Clock = std::chrono::steady_clock;

constexpr double kWorkedExampleBudgetMs = 1.0;
constexpr double kPropEdBudgetSeconds = 10.0;
constexpr double kAlgThmBudgetSeconds = 5.0;

const EngineOptions kSingleThread{kDefaultSizeCap, 1};

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note = why;
        pass = false;
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `f` three times and returns the fastest wall time in milliseconds.
template <typename F>
double best_ms(F&& f) {
    double best = 1e9;
    for (int i = 0; i < 3; ++i) {
        const auto t = Clock::now();
        f();
        best = std::min(best, seconds_since(t) * 1e3);
    }
    return best;
}

Outcome worked_examples() {
    Outcome o;
    double worst = 0;
    auto check = [&](const char* what, auto compute, auto expected) {
        std::optional<decltype(compute())> got;
        const double ms = best_ms([&] { got.emplace(compute()); });
        worst = std::max(worst, ms);
        if (!(*got == expected)) o.fail(std::string(what) + " wrong");
        if (ms >= kWorkedExampleBudgetMs) o.fail(std::string(what) + " too slow");
    };
    const auto P = [](const char* s) { return parse_permutation(s); };
    check("cover(3142)", [&] { return cover(P("3 1 4 2")); }, 3);
    check("cover(2431)", [&] { return cover(P("2 4 3 1")); }, 2);
    check("cycle_neg1", [&] { return cycle_neg1(P("7 8 3 5 1 2 4 9 6")); }, P("5 3 2 8 1 4 6 9 7"));
    check("flip", [&] { return flip(cycle_neg1(P("7 8 3 5 1 2 4 9 6"))); }, P("3 1 4 6 9 2 8 7 5"));
    check("cycle0", [&] { return cycle0(P("3 4 1 5 2")); }, P("3 1 5 4 2"));
    check("cycle0_inverse", [&] { return cycle0_inverse(P("3 4 2 1 5")); }, P("2 4 3 1 5"));
    check("cut", [&] { return cut(P("4 1 5 2 3")); }, P("3 4 1 2"));
    std::ostringstream note;
    note << std::fixed << std::setprecision(4) << "slowest " << worst << " ms";
    if (o.pass) o.note = note.str();
    return o;
}

// Runs verify over n (and k) ranges; any failing report fails the criterion.
void run_identity(Outcome& o, std::string_view id, int n_max, std::optional<int> k_max, const EngineOptions& opts,
                  int* checks = nullptr) {
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= k_max.value_or(1); ++k) {
            const auto r = verify(id, n, k_max ? std::optional<int>(k) : std::nullopt, opts);
            if (checks) ++*checks;
            if (!r.passed) o.fail(to_line(r));
        }
    }
}

Outcome prop_ed() {
    Outcome o;
    run_identity(o, "prop_ed", 7, std::nullopt, kSingleThread);
    const auto start = Clock::now();
    const auto r = verify("prop_ed", 8, std::nullopt, kSingleThread);
    const double secs = seconds_since(start);
    if (!r.passed) o.fail(to_line(r));
    if (secs >= kPropEdBudgetSeconds) o.fail("n=8 took " + std::to_string(secs) + " s");
    if (o.pass) o.note = "n=1..8, n=8 single-threaded in " + std::to_string(secs) + " s";
    return o;
}

Outcome cycle_neg1_props() {
    Outcome o;
    int checks = 0;
    run_identity(o, "exc_bdes", 8, 4, {}, &checks);
    run_identity(o, "unexc_asc", 8, std::nullopt, {}, &checks);
    if (o.pass) o.note = std::to_string(checks) + " exhaustive runs, zero counterexamples";
    return o;
}

Outcome theorem1() {
    Outcome o;
    run_identity(o, "bij_thm_i", 8, 4, {});
    run_identity(o, "bij_thm_ii", 8, 4, {});
    run_identity(o, "bij_thm_iii", 8, 3, {});
    // Image counting, stated separately from the identity run.
    for (int k = 1; k <= 4; ++k) {
        std::set<Code> images;
        for_each_permutation(8, {0, factorial(8)}, [&](Rank, const Permutation& s) { images.insert(maj_encode(s, k)); });
        if (images.size() != factorial(8)) o.fail("maj_encode not injective at n=8, k=" + std::to_string(k));
    }
    if (o.pass) o.note = "clauses (i)-(iii) per element, n<=8; 40320 distinct codes for k=1..4";
    return o;
}

Outcome pair_corollary() {
    Outcome o;
    run_identity(o, "des_maj_pair", 8, std::nullopt, {});
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k <= 3; ++k) {
            const std::vector<StatDescriptor> left{StatDescriptor(StatId::des_k, k), StatDescriptor(StatId::majhat_k, k)};
            const std::vector<StatDescriptor> right{StatDescriptor(StatId::destilde_k, k + 1),
                                                    StatDescriptor(StatId::majhat_k, k + 1)};
            const std::string a = to_json(distribution(n, left, Domain::perms, {}, {"x", "y"}));
            const std::string b = to_json(distribution(n, right, Domain::perms, {}, {"x", "y"}));
            if (a != b) o.fail("serializations differ at n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    if (o.pass) o.note = "byte-identical serializations, n<=8, k=1..3";
    return o;
}

Outcome theorem2() {
    Outcome o;
    run_identity(o, "alg_thm", 6, std::nullopt, {});
    const auto start = Clock::now();
    const auto r = verify("alg_thm", 7, std::nullopt, kSingleThread);
    const double secs = seconds_since(start);
    if (!r.passed) o.fail(to_line(r));
    if (secs >= kAlgThmBudgetSeconds) o.fail("n=7 took " + std::to_string(secs) + " s");
    if (o.pass) o.note = "n=1..7, n=7 in " + std::to_string(secs) + " s";
    return o;
}

Outcome classical() {
    Outcome o;
    const std::vector<StatDescriptor> des{StatDescriptor(StatId::des)};
    DistPolynomial eulerian4({"x"});
    eulerian4.add({0}, 1);
    eulerian4.add({1}, 11);
    eulerian4.add({2}, 11);
    eulerian4.add({3}, 1);
    if (!(distribution(4, des, Domain::perms, {}, {"x"}) == eulerian4)) o.fail("des over S_4 is not 1,11,11,1");

    const std::vector<StatDescriptor> inv_stat{StatDescriptor(StatId::inv)};
    const std::vector<StatDescriptor> maj_stat{StatDescriptor(StatId::maj)};
    const std::vector<StatDescriptor> sum_stat{StatDescriptor(StatId::sum)};
    for (int n = 1; n <= 8; ++n) {
        const auto a = to_json(distribution(n, inv_stat, Domain::perms, {}, {"q"}));
        const auto b = to_json(distribution(n, maj_stat, Domain::perms, {}, {"q"}));
        const auto c = to_json(distribution(n, sum_stat, Domain::codes, {}, {"q"}));
        if (a != b || b != c) o.fail("inv/maj/sum differ at n=" + std::to_string(n));
    }
    if (o.pass) o.note = "Eulerian row (1,11,11,1); inv = maj = sum for n<=8";
    return o;
}

Outcome insert_lemmas() {
    Outcome o;
    long long checked = 0;
    long long union_disagreements = 0;
    for (int size = 1; size <= 7; ++size) {
        for_each_permutation(size, {0, factorial(size)}, [&](Rank, const Permutation& s) {
            const int n = size + 1;
            for (int k = 1; k <= 4; ++k) {
                const InsertProfile profile = a_profile(s, k);
                std::vector<bool> seen(static_cast<std::size_t>(n), false);
                for (int i = 1; i <= n; ++i) {
                    ++checked;
                    const int direct = majhat_k(insert(s, i), k) - majhat_k(s, k);
                    if (insert_delta(s, i, k) != direct) o.fail("closed form disagrees");
                    if (direct < 0 || direct >= n || seen[static_cast<std::size_t>(direct)]) {
                        o.fail("delta values are not a permutation of 0..n-1");
                    } else {
                        seen[static_cast<std::size_t>(direct)] = true;
                    }
                    // The union reading: |A_k u {i+1..n}| + (i in A_k ? 0 : i-1).
                    std::set<int> united(profile.a_set.begin(), profile.a_set.end());
                    for (int j = i + 1; j <= n; ++j) united.insert(j);
                    const int union_form = static_cast<int>(united.size()) + (profile.contains(i) ? 0 : i - 1);
                    union_disagreements += union_form != direct;
                }
            }
        });
    }
    if (union_disagreements == 0) o.fail("union reading was not refuted");
    if (o.pass) {
        o.note = std::to_string(checked) + " insertions agree (intersection); union reading wrong in " +
                 std::to_string(union_disagreements);
    }
    return o;
}

Outcome parallel_determinism() {
    Outcome o;
    auto run_dist = [](const char* threads) {
        std::ostringstream out;
        std::ostringstream err;
        const std::vector<std::string> args{"dist", "--n", "9", "--stats", "des,maj", "--json", "--threads", threads};
        const int code = cli::run(args, out, err);
        return std::make_pair(code, out.str());
    };
    const auto one = run_dist("1");
    const auto eight = run_dist("8");
    if (one.first != 0 || eight.first != 0) o.fail("dist exited nonzero");
    if (one.second != eight.second) o.fail("outputs differ");
    if (o.pass) o.note = "n=9 (des, maj): " + std::to_string(one.second.size()) + " identical bytes";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 worked-example fidelity", worked_examples},
        {"AC2 (des, cover) ~ (exc, des)", prop_ed},
        {"AC3 cycle_neg1 sends exc_k and unexc per element", cycle_neg1_props},
        {"AC4 maj coding scheme clauses and bijectivity", theorem1},
        {"AC5 (des_k, majhat_k) ~ (destilde_{k+1}, majhat_{k+1})", pair_corollary},
        {"AC6 three-variable q, p, t identity", theorem2},
        {"AC7 classical Eulerian and Mahonian sanity", classical},
        {"AC8 insertion delta closed form", insert_lemmas},
        {"AC9 determinism under parallelism", parallel_determinism},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = Clock::now();
        const Outcome o = run();
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " -- " << o.note << " [" << std::fixed
                  << std::setprecision(2) << seconds_since(start) << " s]" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
