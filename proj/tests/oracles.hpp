#pragma once

// Independent reference implementations used only by the tests. They follow
// the definitions as literally as possible and share no code with the
// library beyond the value types.

#include "arcperm/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using arcperm::Permutation;
using arcperm::SignedPermutation;

inline std::vector<std::vector<int>> all_words(int n)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    for (auto& w : all_words(n))
        out.emplace_back(w);
    return out;
}

inline std::vector<SignedPermutation> all_signed(int n)
{
    std::vector<SignedPermutation> out;
    for (const auto& w : all_words(n))
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            auto s = w;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i))
                    s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
            out.emplace_back(s);
        }
    return out;
}

/// Rank of v in the listed order -1 < -2 < ... < -n < 1 < ... < n.
inline int b_rank(int v, int n)
{
    std::vector<int> order;
    for (int i = 1; i <= n; ++i)
        order.push_back(-i);
    for (int i = 1; i <= n; ++i)
        order.push_back(i);
    return static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
}

struct Stats {
    std::set<int> des;
    int maj = 0;
    int inv_abs = 0;
    int neg = 0;
    int fmaj = 0;
    int fdes = 0;
};

inline Stats stats(const SignedPermutation& p)
{
    const int n = p.size();
    Stats s;
    for (int i = 1; i < n; ++i)
        if (b_rank(p(i), n) > b_rank(p(i + 1), n)) {
            s.des.insert(i);
            s.maj += i;
        }
    for (int i = 1; i <= n; ++i) {
        if (p(i) < 0)
            ++s.neg;
        for (int j = i + 1; j <= n; ++j)
            if (std::abs(p(i)) > std::abs(p(j)))
                ++s.inv_abs;
    }
    s.fmaj = 2 * s.maj + s.neg;
    s.fdes = 2 * static_cast<int>(s.des.size()) + (p(1) < 0 ? 1 : 0);
    return s;
}

/// Determinant by cofactor expansion; fine for the tiny matrices used here.
inline long long det(const std::vector<std::vector<long long>>& m)
{
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    long long total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<long long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long long> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        total += (c % 2 == 0 ? 1 : -1) * m[0][c] * det(minor);
    }
    return total;
}

/// n x n matrix with entry +-1 at (|pi(i)|, i) carrying the sign of pi(i).
inline std::vector<std::vector<long long>> signed_matrix(const SignedPermutation& p)
{
    const auto n = static_cast<std::size_t>(p.size());
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 1; i <= p.size(); ++i)
        m[static_cast<std::size_t>(std::abs(p(i)) - 1)][static_cast<std::size_t>(i - 1)] = p(i) > 0 ? 1 : -1;
    return m;
}

/// Every cyclic interval of Z_n (as sets), including empty and full.
inline std::set<std::set<int>> cyclic_intervals(int n)
{
    std::set<std::set<int>> out{{}};
    for (int start = 1; start <= n; ++start) {
        std::set<int> s;
        for (int len = 0; len < n; ++len) {
            s.insert((start - 1 + len) % n + 1);
            out.insert(s);
        }
    }
    return out;
}

inline bool prefixes_in(const std::vector<int>& word, const std::set<std::set<int>>& allowed)
{
    std::set<int> prefix;
    for (int v : word) {
        prefix.insert(v);
        if (!allowed.count(prefix))
            return false;
    }
    return true;
}

inline bool is_arc(const Permutation& p)
{
    std::vector<int> w(p.word().begin(), p.word().end());
    return prefixes_in(w, cyclic_intervals(p.size()));
}

inline bool is_left_unimodal(const Permutation& p)
{
    std::set<int> prefix;
    for (int v : p.word()) {
        prefix.insert(v);
        if (*prefix.rbegin() - *prefix.begin() + 1 != static_cast<int>(prefix.size()))
            return false;
    }
    return true;
}

/// Suffixes must be runs of the circle whose points read -1,-2,...,-n,1,...,n
/// clockwise.
inline bool is_b_arc(const SignedPermutation& p)
{
    const int n = p.size();
    std::vector<int> circle;
    for (int j = 1; j <= n; ++j)
        circle.push_back(-j);
    for (int j = 1; j <= n; ++j)
        circle.push_back(j);
    auto index = [&](int v) { return static_cast<int>(std::find(circle.begin(), circle.end(), v) - circle.begin()); };
    const auto intervals = cyclic_intervals(2 * n);
    std::set<int> suffix;
    for (int i = n; i >= 1; --i) {
        suffix.insert(index(p(i)) + 1);
        if (!intervals.count(suffix))
            return false;
    }
    return true;
}

inline bool is_signed_arc(const SignedPermutation& p)
{
    const int n = p.size();
    std::vector<int> abs_word;
    for (int v : p.word())
        abs_word.push_back(std::abs(v));
    if (!oracle::is_arc(Permutation(abs_word)))
        return false;
    for (int i = 2; i < n; ++i) {
        std::set<int> before(abs_word.begin(), abs_word.begin() + (i - 1));
        const int a = abs_word[static_cast<std::size_t>(i - 1)];
        const int below = a == 1 ? n : a - 1;
        const int above = a == n ? 1 : a + 1;
        if (p(i) > 0 && !before.count(below))
            return false;
        if (p(i) < 0 && !before.count(above))
            return false;
    }
    return true;
}

/// Containment by trying every index subset.
inline bool contains(const SignedPermutation& p, const SignedPermutation& pat)
{
    const int n = p.size(), k = pat.size();
    if (k > n)
        return false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k)
            continue;
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                sub.push_back(p(i + 1));
        bool ok = true;
        for (int a = 0; a < k && ok; ++a) {
            if ((sub[static_cast<std::size_t>(a)] > 0) != (pat(a + 1) > 0))
                ok = false;
            for (int b = 0; b < k && ok; ++b)
                if ((std::abs(sub[static_cast<std::size_t>(a)]) < std::abs(sub[static_cast<std::size_t>(b)])) !=
                    (std::abs(pat(a + 1)) < std::abs(pat(b + 1))))
                    ok = false;
        }
        if (ok)
            return true;
    }
    return false;
}

inline bool contains(const Permutation& p, const Permutation& pat)
{
    return oracle::contains(SignedPermutation::from_unsigned(p), SignedPermutation::from_unsigned(pat));
}

} // namespace oracle
