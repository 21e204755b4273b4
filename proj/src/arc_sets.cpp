#include "arcperm/arc_sets.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace arcperm {

int CircleOn::point_to_index(int v) const
{
    if (v == 0 || std::abs(v) > n)
        throw std::invalid_argument("point " + std::to_string(v) + " is not on O_" + std::to_string(n));
    return v > 0 ? v - 1 : n - v - 1;
}

int CircleOn::index_to_point(int idx) const
{
    idx = ((idx % (2 * n)) + 2 * n) % (2 * n);
    return idx < n ? idx + 1 : -(idx - n + 1);
}

namespace {

// True iff the (distinct) residues in `idx` form one contiguous run on Z_m.
bool is_cyclic_run(std::vector<int> idx, int m)
{
    const auto k = idx.size();
    if (k == 0 || static_cast<int>(k) >= m)
        return true;
    std::sort(idx.begin(), idx.end());
    int gaps = 0;
    for (std::size_t i = 0; i + 1 < k; ++i)
        gaps += idx[i + 1] - idx[i] > 1;
    gaps += idx.front() + m - idx.back() > 1;
    return gaps <= 1;
}

int wrap(int v, int n) { return ((v - 1) % n + n) % n + 1; }

} // namespace

bool is_interval_Zn(std::span<const int> values, int n)
{
    std::vector<int> idx;
    idx.reserve(values.size());
    for (int v : values) {
        if (v < 1 || v > n)
            throw std::invalid_argument("value " + std::to_string(v) + " is not in Z_" + std::to_string(n));
        idx.push_back(v - 1);
    }
    return is_cyclic_run(std::move(idx), n);
}

bool is_interval_On(std::span<const int> values, int n)
{
    const CircleOn circle{n};
    std::vector<int> idx;
    idx.reserve(values.size());
    for (int v : values)
        idx.push_back(circle.point_to_index(v));
    return is_cyclic_run(std::move(idx), 2 * n);
}

// ---------------------------------------------------------------------------
// Definitions

std::optional<DefinitionFailure> arc_failure(const Permutation& p)
{
    const auto w = p.word();
    for (int j = 1; j <= p.size(); ++j)
        if (!is_interval_Zn(w.first(static_cast<std::size_t>(j)), p.size()))
            return DefinitionFailure{j, "prefix of length " + std::to_string(j) +
                                            " is not an interval of Z_" + std::to_string(p.size())};
    return std::nullopt;
}

std::optional<DefinitionFailure> left_unimodal_failure(const Permutation& p)
{
    int lo = p(1), hi = p(1);
    for (int j = 2; j <= p.size(); ++j) {
        lo = std::min(lo, p(j));
        hi = std::max(hi, p(j));
        if (hi - lo + 1 != j)
            return DefinitionFailure{j, "prefix of length " + std::to_string(j) + " is not an interval of Z"};
    }
    return std::nullopt;
}

std::optional<DefinitionFailure> signed_arc_failure(const SignedPermutation& p)
{
    const int n = p.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> prefix;
    for (int i = 1; i <= n; ++i) {
        const int a = std::abs(p(i));
        if (i > 1 && i < n) {
            const bool below = seen[static_cast<std::size_t>(wrap(a - 1, n))];
            const bool above = seen[static_cast<std::size_t>(wrap(a + 1, n))];
            prefix.push_back(a);
            if (!is_interval_Zn(prefix, n))
                return DefinitionFailure{i, "absolute prefix of length " + std::to_string(i) +
                                                " is not an interval of Z_" + std::to_string(n)};
            if (p(i) > 0 && !below)
                return DefinitionFailure{i, "entry " + std::to_string(p(i)) + " at position " +
                                                std::to_string(i) + " must be negative"};
            if (p(i) < 0 && !above)
                return DefinitionFailure{i, "entry " + std::to_string(p(i)) + " at position " +
                                                std::to_string(i) + " must be positive"};
        } else {
            prefix.push_back(a);
        }
        seen[static_cast<std::size_t>(a)] = true;
    }
    return std::nullopt;
}

std::optional<DefinitionFailure> b_arc_failure(const SignedPermutation& p)
{
    const auto w = p.word();
    for (int j = p.size(); j >= 1; --j)
        if (!is_interval_On(w.subspan(static_cast<std::size_t>(j - 1)), p.size()))
            return DefinitionFailure{j, "suffix starting at position " + std::to_string(j) +
                                            " is not an interval of O_" + std::to_string(p.size())};
    return std::nullopt;
}

bool is_arc(const Permutation& p) { return !arc_failure(p); }
bool is_left_unimodal(const Permutation& p) { return !left_unimodal_failure(p); }
bool is_signed_arc(const SignedPermutation& p) { return !signed_arc_failure(p); }
bool is_b_arc(const SignedPermutation& p) { return !b_arc_failure(p); }

// ---------------------------------------------------------------------------
// Generators

namespace {

void check_n(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive, got " + std::to_string(n));
}

} // namespace

std::vector<Permutation> generate_arc(int n)
{
    check_n(n);
    std::vector<Permutation> out;
    std::vector<int> word;
    // The prefix occupies the cyclic interval lo, lo+1, ..., lo+len-1 (values 1..n).
    std::function<void(int, int)> grow = [&](int lo, int len) {
        if (len == n) {
            out.emplace_back(word);
            return;
        }
        const int left = wrap(lo - 1, n);
        const int right = wrap(lo + len, n);
        word.push_back(left);
        grow(left, len + 1);
        word.pop_back();
        if (right != left) {
            word.push_back(right);
            grow(lo, len + 1);
            word.pop_back();
        }
    };
    for (int v = 1; v <= n; ++v) {
        word.assign(1, v);
        grow(v, 1);
    }
    return out;
}

std::vector<Permutation> generate_left_unimodal(int n)
{
    check_n(n);
    std::vector<Permutation> out;
    std::vector<int> word;
    std::function<void(int, int)> grow = [&](int lo, int hi) {
        if (hi - lo + 1 == n) {
            out.emplace_back(word);
            return;
        }
        if (lo > 1) {
            word.push_back(lo - 1);
            grow(lo - 1, hi);
            word.pop_back();
        }
        if (hi < n) {
            word.push_back(hi + 1);
            grow(lo, hi + 1);
            word.pop_back();
        }
    };
    for (int v = 1; v <= n; ++v) {
        word.assign(1, v);
        grow(v, v);
    }
    return out;
}

std::vector<SignedPermutation> generate_signed_arc(int n)
{
    check_n(n);
    if (n == 1)
        return {SignedPermutation({1}), SignedPermutation({-1})};
    std::vector<SignedPermutation> out;
    for (const Permutation& sigma : generate_arc(n)) {
        std::vector<int> w(sigma.word().begin(), sigma.word().end());
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        seen[static_cast<std::size_t>(w[0])] = true;
        for (int i = 2; i < n; ++i) {
            int& v = w[static_cast<std::size_t>(i - 1)];
            if (seen[static_cast<std::size_t>(wrap(v + 1, n))])
                v = -v;
            seen[static_cast<std::size_t>(std::abs(v))] = true;
        }
        for (int first : {1, -1})
            for (int last : {1, -1}) {
                auto decorated = w;
                decorated.front() *= first;
                decorated.back() *= last;
                out.emplace_back(std::move(decorated));
            }
    }
    return out;
}

std::vector<SignedPermutation> generate_b_arc(int n)
{
    check_n(n);
    const CircleOn circle{n};
    const int m = 2 * n;
    std::vector<SignedPermutation> out;
    // Entries are written right to left; `rev` holds pi(n), pi(n-1), ...
    std::vector<int> rev;
    std::function<void(int, int)> grow = [&](int lo, int len) {
        if (len == n) {
            out.emplace_back(std::vector<int>(rev.rbegin(), rev.rend()));
            return;
        }
        rev.push_back(circle.index_to_point(lo - 1));
        grow((lo - 1 + m) % m, len + 1);
        rev.pop_back();
        rev.push_back(circle.index_to_point(lo + len));
        grow(lo, len + 1);
        rev.pop_back();
    };
    for (int idx = 0; idx < m; ++idx) {
        rev.assign(1, circle.index_to_point(idx));
        grow(idx, 1);
    }
    return out;
}

std::vector<Permutation> generate_symmetric(int n, int max_n)
{
    check_n(n);
    if (n > max_n)
        throw SizeLimitError("refusing to enumerate S_" + std::to_string(n) + ": limit is n <= " +
                             std::to_string(max_n));
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<SignedPermutation> generate_hyperoctahedral(int n, int max_n)
{
    check_n(n);
    if (n > max_n)
        throw SizeLimitError("refusing to enumerate B_" + std::to_string(n) + ": limit is n <= " +
                             std::to_string(max_n));
    std::vector<SignedPermutation> out;
    for (const Permutation& p : generate_symmetric(n, max_n)) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> w(p.word().begin(), p.word().end());
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i))
                    w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
            out.emplace_back(std::move(w));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(SetKind kind)
{
    switch (kind) {
    case SetKind::arc:
        return "arc";
    case SetKind::left_unimodal:
        return "left-unimodal";
    case SetKind::signed_arc:
        return "signed-arc";
    case SetKind::b_arc:
        return "b-arc";
    case SetKind::symmetric:
        return "sym";
    case SetKind::hyperoctahedral:
        return "hyp";
    }
    return "?";
}

SetKind parse_set_kind(std::string_view name)
{
    for (SetKind k : {SetKind::arc, SetKind::left_unimodal, SetKind::signed_arc, SetKind::b_arc,
                      SetKind::symmetric, SetKind::hyperoctahedral})
        if (to_string(k) == name)
            return k;
    throw std::invalid_argument("unknown set '" + std::string(name) + "'");
}

bool is_signed_family(SetKind kind)
{
    return kind == SetKind::signed_arc || kind == SetKind::b_arc || kind == SetKind::hyperoctahedral;
}

std::vector<SignedPermutation> generate_family(SetKind kind, int n, bool unguarded)
{
    auto embed = [](const std::vector<Permutation>& ps) {
        std::vector<SignedPermutation> out;
        out.reserve(ps.size());
        for (const auto& p : ps)
            out.push_back(SignedPermutation::from_unsigned(p));
        return out;
    };
    const int big = 1 << 20;
    switch (kind) {
    case SetKind::arc:
        return embed(generate_arc(n));
    case SetKind::left_unimodal:
        return embed(generate_left_unimodal(n));
    case SetKind::signed_arc:
        return generate_signed_arc(n);
    case SetKind::b_arc:
        return generate_b_arc(n);
    case SetKind::symmetric:
        return embed(generate_symmetric(n, unguarded ? big : default_symmetric_limit));
    case SetKind::hyperoctahedral:
        return generate_hyperoctahedral(n, unguarded ? big : default_hyperoctahedral_limit);
    }
    return {};
}

} // namespace arcperm
