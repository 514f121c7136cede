#include "permstat/coding.hpp"

#include <algorithm>
#include <string>

#include "permstat/error.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

void require_k(int k, const char* what) {
    if (k < 1) throw InvalidArgument(std::string(what) + " requires k >= 1, got " + std::to_string(k));
}

InsertProfile profile_from_set(std::vector<int> a_set, int n) {
    InsertProfile out;
    out.a_set = std::move(a_set);
    out.sequence.assign(out.a_set.rbegin(), out.a_set.rend());
    for (int i = 1; i <= n; ++i) {
        if (!std::binary_search(out.a_set.begin(), out.a_set.end(), i)) out.sequence.push_back(i);
    }
    return out;
}

}  // namespace

bool InsertProfile::contains(int position) const {
    return std::binary_search(a_set.begin(), a_set.end(), position);
}

Code inv_encode(const Permutation& sigma) {
    const int n = sigma.size();
    const Permutation pos = inverse(sigma);
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int j = pos(i) + 1; j <= n; ++j) count += sigma(j) < i ? 1 : 0;
        c[static_cast<std::size_t>(i - 1)] = count;
    }
    return Code(std::move(c));
}

Permutation inv_decode(const Code& c) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(c.size()));
    word.push_back(1);
    for (int i = 2; i <= c.size(); ++i) {
        // Slot 0 is the end, slot i-1 the front.
        const auto at = static_cast<std::ptrdiff_t>(word.size()) - c(i);
        word.insert(word.begin() + at, i);
    }
    return Permutation(std::move(word));
}

InsertProfile a_profile(const Permutation& sigma, int k) {
    require_k(k, "a_profile");
    const int size = sigma.size();
    const int n = size + 1;
    std::vector<int> a_set{1};
    for (int i = 2; i <= n; ++i) {
        // Inserting after the last entry cannot break an existing k-descent.
        const bool breaks_descent = i <= size && sigma(i - 1) >= sigma(i) + k;
        const bool creates_none = sigma(i - 1) < k;
        if (breaks_descent || creates_none) a_set.push_back(i);
    }
    return profile_from_set(std::move(a_set), n);
}

InsertProfile a_tilde_profile(const Permutation& sigma, int m) {
    if (m < 2) throw InvalidArgument("a_tilde_profile requires m = k+1 >= 2, got " + std::to_string(m));
    const int k = m - 1;
    InsertProfile out = a_profile(sigma, m);
    if (sigma(1) > sigma.size() - k) {
        out.a_set.erase(out.a_set.begin());
    }
    return out;
}

int insert_delta(const Permutation& sigma, int position, int k) {
    const int n = sigma.size() + 1;
    if (position < 1 || position > n) {
        throw InvalidArgument("insert position " + std::to_string(position) + " outside 1.." + std::to_string(n));
    }
    const InsertProfile profile = a_profile(sigma, k);
    const auto later = std::count_if(profile.a_set.begin(), profile.a_set.end(), [&](int a) { return a > position; });
    return static_cast<int>(later) + (profile.contains(position) ? 0 : position - 1);
}

Code maj_encode(const Permutation& sigma, int k) {
    require_k(k, "maj_encode");
    const int n = sigma.size();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    Permutation current = sigma;
    int current_value = majhat_k(current, k);
    for (int i = n; i >= 2; --i) {
        Permutation shorter = cut(current);
        const int shorter_value = majhat_k(shorter, k);
        c[static_cast<std::size_t>(i - 1)] = current_value - shorter_value;
        current = std::move(shorter);
        current_value = shorter_value;
    }
    // Code validates 0 <= c(i) < i; a throw here is a bug in this map.
    return Code(std::move(c));
}

Permutation maj_decode(const Code& c, int k) {
    require_k(k, "maj_decode");
    Permutation current = Permutation::identity(1);
    for (int i = 2; i <= c.size(); ++i) {
        const InsertProfile profile = a_profile(current, k);
        current = insert(current, profile.sequence[static_cast<std::size_t>(c(i))]);
    }
    return current;
}

}  // namespace permstat
