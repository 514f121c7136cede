#include "permstat/polynomial.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "permstat/error.hpp"

namespace permstat {

DistPolynomial::DistPolynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

void DistPolynomial::add(const Exponents& exponents, const Coefficient& amount) {
    if (exponents.size() != variables_.size()) {
        throw InvalidArgument("exponent vector has " + std::to_string(exponents.size()) + " entries, expected " +
                              std::to_string(variables_.size()));
    }
    if (amount == 0) return;
    if (amount < 0) throw InvalidArgument("distribution coefficients are nonnegative");
    terms_[exponents] += amount;
}

void DistPolynomial::merge(const DistPolynomial& other) {
    if (other.arity() != arity()) throw InvalidArgument("cannot merge polynomials of different arity");
    for (const auto& [e, c] : other.terms_) terms_[e] += c;
}

Coefficient DistPolynomial::coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Coefficient{0} : it->second;
}

Coefficient DistPolynomial::total() const {
    Coefficient sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

Comparison equal_distribution(const DistPolynomial& p, const DistPolynomial& q) {
    if (p.arity() != q.arity()) throw InvalidArgument("cannot compare polynomials of different arity");
    // Merge-walk both ordered term maps; the first mismatch is the least key.
    auto a = p.terms().begin();
    auto b = q.terms().begin();
    const auto a_end = p.terms().end();
    const auto b_end = q.terms().end();
    while (a != a_end || b != b_end) {
        if (b == b_end || (a != a_end && a->first < b->first)) {
            return {false, TermMismatch{a->first, a->second, 0}};
        }
        if (a == a_end || b->first < a->first) {
            return {false, TermMismatch{b->first, 0, b->second}};
        }
        if (a->second != b->second) return {false, TermMismatch{a->first, a->second, b->second}};
        ++a;
        ++b;
    }
    return {};
}

std::string to_json(const DistPolynomial& p) {
    nlohmann::ordered_json doc;
    doc["vars"] = p.variables();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["exp"] = e;
        term["coef"] = c.str();
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

DistPolynomial polynomial_from_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        DistPolynomial p(doc.at("vars").get<std::vector<std::string>>());
        for (const auto& term : doc.at("terms")) {
            p.add(term.at("exp").get<Exponents>(), Coefficient(term.at("coef").get<std::string>()));
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial document: ") + e.what());
    } catch (const std::runtime_error& e) {
        // cpp_int rejects non-decimal coefficient strings this way.
        throw ParseError(std::string("malformed polynomial coefficient: ") + e.what());
    }
}

std::string to_string(const Exponents& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(e[i]);
    }
    return out + ")";
}

std::string to_text(const DistPolynomial& p) {
    std::ostringstream out;
    out << "vars:";
    for (const auto& v : p.variables()) out << ' ' << v;
    out << '\n';
    for (const auto& [e, c] : p.terms()) {
        for (auto x : e) out << x << ' ';
        out << ": " << c << '\n';
    }
    return out.str();
}

}  // namespace permstat
