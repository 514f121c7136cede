#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permstat {

using Coefficient = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::int64_t>;

/// Sparse multivariate polynomial with positive integer coefficients,
/// keyed by exponent vector. Terms iterate in lexicographic order.
class DistPolynomial {
public:
    explicit DistPolynomial(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::map<Exponents, Coefficient>& terms() const noexcept { return terms_; }
    std::size_t arity() const noexcept { return variables_.size(); }

    /// Adds `amount` to the coefficient of x^exponents. A zero amount is a no-op.
    void add(const Exponents& exponents, const Coefficient& amount);
    /// Term-wise sum; arities must agree.
    void merge(const DistPolynomial& other);

    /// Coefficient of x^exponents, zero if absent.
    Coefficient coefficient(const Exponents& exponents) const;
    Coefficient total() const;

    /// Same terms regardless of variable names.
    friend bool operator==(const DistPolynomial& a, const DistPolynomial& b) { return a.terms_ == b.terms_; }

private:
    std::vector<std::string> variables_;
    std::map<Exponents, Coefficient> terms_;
};

struct TermMismatch {
    Exponents exponents;
    Coefficient left;
    Coefficient right;
};

struct Comparison {
    bool equal = true;
    std::optional<TermMismatch> first_difference;
};

/// Compares term maps; on mismatch reports the lexicographically least
/// exponent vector whose coefficients differ. Throws InvalidArgument on an
/// arity mismatch.
Comparison equal_distribution(const DistPolynomial& p, const DistPolynomial& q);

/// {"vars":[...],"terms":[{"exp":[...],"coef":"..."},...]} on one line,
/// terms in lexicographic exponent order. Byte-stable.
std::string to_json(const DistPolynomial& p);
DistPolynomial polynomial_from_json(std::string_view text);

/// Human-readable form: a header naming the variables, then one
/// "e1 e2 ... : coef" line per term.
std::string to_text(const DistPolynomial& p);

std::string to_string(const Exponents& e);

}  // namespace permstat
