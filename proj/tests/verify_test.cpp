#include <gtest/gtest.h>

#include "permstat/error.hpp"
#include "permstat/verify.hpp"

namespace permstat {
namespace {

TEST(Verify, RegistryContents) {
    std::vector<std::string> names;
    for (const auto& id : identities()) names.emplace_back(id.name);
    EXPECT_EQ(names, (std::vector<std::string>{"prop_ed", "exc_bdes", "unexc_asc", "multivar", "asc_des_symmetry",
                                               "des_maj_pair", "pair_k", "bij_thm_i", "bij_thm_ii", "bij_thm_iii",
                                               "code_st", "alg_thm"}));
    EXPECT_THROW(find_identity("nope"), UnknownName);
}

TEST(Verify, Errors) {
    EXPECT_THROW(verify("nope", 3), UnknownName);
    EXPECT_THROW(verify("pair_k", 3), InvalidArgument);
    EXPECT_THROW(verify("prop_ed", 3, 1), InvalidArgument);
    EXPECT_THROW(verify("pair_k", 3, 0), InvalidArgument);
    EXPECT_THROW(verify("prop_ed", 12), SizeCapExceeded);
}

TEST(Verify, EveryIdentityHoldsAtDeskScale) {
    for (const auto& info : identities()) {
        const int max_n = info.name == "alg_thm" ? 7 : 8;
        for (int n = 1; n <= max_n; ++n) {
            for (int k = 1; k <= (info.takes_k ? 4 : 1); ++k) {
                const auto k_arg = info.takes_k ? std::optional<int>(k) : std::nullopt;
                const VerificationReport r = verify(info.name, n, k_arg, EngineOptions{kDefaultSizeCap, 2});
                ASSERT_TRUE(r.passed) << to_line(r);
                ASSERT_FALSE(r.has_counterexample());
            }
        }
    }
}

TEST(Verify, AlgThmAtSizeOne) {
    const VerificationReport r = verify("alg_thm", 1);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(to_line(r), "alg_thm n=1 pass");
}

TEST(Verify, ExcBdesAtSizeNine) {
    const VerificationReport r = verify("exc_bdes", 9, 1, EngineOptions{kDefaultSizeCap, 0});
    EXPECT_TRUE(r.passed);
}

TEST(Verify, ReportFormats) {
    const VerificationReport r = verify("bij_thm_i", 4, 2);
    EXPECT_EQ(to_line(r), "bij_thm_i n=4 k=2 pass (24 distinct codes)");
    EXPECT_EQ(to_json(r), R"({"identity":"bij_thm_i","n":4,"k":2,"status":"pass","detail":"24 distinct codes"})");

    VerificationReport failed;
    failed.identity = "unexc_asc";
    failed.n = 2;
    failed.counterexample = Permutation({2, 1});
    failed.detail = "unexc vs asc: 1 != 0";
    EXPECT_EQ(to_line(failed), "unexc_asc n=2 FAIL counterexample=[2 1] (unexc vs asc: 1 != 0)");
    EXPECT_TRUE(failed.has_counterexample());
}

}  // namespace
}  // namespace permstat
