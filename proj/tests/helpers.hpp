#pragma once

#include <string_view>

#include "oracle/brute.hpp"
#include "permstat/code.hpp"
#include "permstat/permutation.hpp"

namespace permstat::testing {

inline Permutation P(std::string_view text) { return parse_permutation(text); }
inline Code C(std::string_view text) { return parse_code(text); }
inline Permutation from_word(const oracle::Word& w) { return Permutation(w); }
inline oracle::Word to_word(const Permutation& p) { return {p.values().begin(), p.values().end()}; }

}  // namespace permstat::testing
