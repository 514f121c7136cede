#include <gtest/gtest.h>

#include <random>

#include "permstat/error.hpp"
#include "permstat/polynomial.hpp"

namespace permstat {
namespace {

TEST(DistPolynomial, AccumulatesAndDropsZeroAmounts) {
    DistPolynomial p({"t"});
    p.add({1}, 3);
    p.add({1}, 2);
    p.add({0}, 0);
    EXPECT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(p.coefficient({1}), 5);
    EXPECT_EQ(p.coefficient({0}), 0);
    EXPECT_EQ(p.total(), 5);
    EXPECT_THROW(p.add({1, 2}, 1), InvalidArgument);
    EXPECT_THROW(p.add({1}, -1), InvalidArgument);
}

TEST(DistPolynomial, CoefficientsAreNotBoundedBy64Bits) {
    DistPolynomial p({"t"});
    const Coefficient big = Coefficient(1) << 70;
    p.add({0}, big);
    p.add({0}, big);
    EXPECT_EQ(p.coefficient({0}), Coefficient(1) << 71);
    EXPECT_EQ(to_json(p), R"({"vars":["t"],"terms":[{"exp":[0],"coef":"2361183241434822606848"}]})");
}

TEST(EqualDistribution, ReportsLeastDifferingTerm) {
    DistPolynomial p({"x", "y"});
    DistPolynomial q({"a", "b"});
    p.add({0, 0}, 1);
    q.add({0, 0}, 1);
    EXPECT_TRUE(equal_distribution(p, p).equal);
    EXPECT_TRUE(equal_distribution(p, q).equal);

    p.add({2, 1}, 4);
    q.add({1, 5}, 4);
    const Comparison cmp = equal_distribution(p, q);
    ASSERT_FALSE(cmp.equal);
    EXPECT_EQ(cmp.first_difference->exponents, (Exponents{1, 5}));
    EXPECT_EQ(cmp.first_difference->left, 0);
    EXPECT_EQ(cmp.first_difference->right, 4);

    EXPECT_THROW(equal_distribution(p, DistPolynomial({"x"})), InvalidArgument);
}

TEST(Serialization, CanonicalFormat) {
    DistPolynomial p({"t", "x"});
    p.add({1, 0}, 2);
    p.add({0, 3}, 1);
    EXPECT_EQ(to_json(p),
              R"({"vars":["t","x"],"terms":[{"exp":[0,3],"coef":"1"},{"exp":[1,0],"coef":"2"}]})");
    EXPECT_EQ(to_text(p), "vars: t x\n0 3 : 1\n1 0 : 2\n");
}

TEST(Serialization, RandomRoundTripIsByteStable) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t arity = 1 + rng() % 4;
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < arity; ++i) vars.push_back("v" + std::to_string(i));
        DistPolynomial p(vars);
        const int terms = static_cast<int>(rng() % 12);
        for (int t = 0; t < terms; ++t) {
            Exponents e(arity);
            for (auto& x : e) x = static_cast<std::int64_t>(rng() % 7) - 1;
            p.add(e, Coefficient(rng() % 1000 + 1) * Coefficient(rng()));
        }
        const std::string doc = to_json(p);
        const DistPolynomial back = polynomial_from_json(doc);
        ASSERT_EQ(back, p);
        ASSERT_EQ(back.variables(), p.variables());
        ASSERT_EQ(to_json(back), doc);
    }
}

TEST(Serialization, RejectsMalformedDocuments) {
    EXPECT_THROW(polynomial_from_json("{"), ParseError);
    EXPECT_THROW(polynomial_from_json(R"({"vars":["t"]})"), ParseError);
    EXPECT_THROW(polynomial_from_json(R"({"vars":["t"],"terms":[{"exp":[1],"coef":"x1"}]})"), ParseError);
}

}  // namespace
}  // namespace permstat
