#include "arcperm/patterns.hpp"

#include "arcperm/arc_sets.hpp"

#include <algorithm>
#include <cstdlib>

namespace arcperm {

namespace {

// Depth-first search over increasing 0-based index tuples. `value(i)` is the
// magnitude compared for order-isomorphism, `admissible(i, j)` filters
// position i as the j-th pattern letter (the sign match for signed patterns).
template <class Value, class Admissible>
std::optional<std::vector<int>> search(int n, std::span<const int> pattern_abs, Value value,
                                       Admissible admissible)
{
    const int k = static_cast<int>(pattern_abs.size());
    if (k > n)
        return std::nullopt;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));

    // The new letter must compare with every chosen letter as the pattern does.
    auto consistent = [&](int pos, int j) {
        for (int r = 0; r < j; ++r) {
            const bool pat_less = pattern_abs[static_cast<std::size_t>(r)] < pattern_abs[static_cast<std::size_t>(j)];
            const bool txt_less = value(chosen[static_cast<std::size_t>(r)]) < value(pos);
            if (pat_less != txt_less)
                return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, int start, int j) -> bool {
        if (j == k)
            return true;
        for (int pos = start; pos <= n - (k - j); ++pos) {
            if (!admissible(pos, j) || !consistent(pos, j))
                continue;
            chosen.push_back(pos);
            if (self(self, pos + 1, j + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!recurse(recurse, 0, 0))
        return std::nullopt;
    for (int& i : chosen)
        ++i;
    return chosen;
}

template <class Pattern, class Text>
AvoidanceResult<Pattern> avoids_all_impl(const Text& p, const std::vector<Pattern>& patterns)
{
    AvoidanceResult<Pattern> result;
    for (const Pattern& pat : patterns) {
        auto occ = find_occurrence(p, pat);
        if (!occ)
            continue;
        if (!result.witness || *occ < result.witness->indices) {
            result.avoids = false;
            result.witness = Occurrence<Pattern>{pat, std::move(*occ)};
        }
    }
    return result;
}

} // namespace

std::optional<std::vector<int>> find_occurrence(const Permutation& p, const Permutation& pat)
{
    const auto w = p.word();
    return search(
        p.size(), pat.word(), [&](int i) { return w[static_cast<std::size_t>(i)]; },
        [](int, int) { return true; });
}

std::optional<std::vector<int>> find_occurrence(const SignedPermutation& p, const SignedPattern& pat)
{
    const auto w = p.word();
    std::vector<int> pat_abs;
    for (int v : pat.word())
        pat_abs.push_back(std::abs(v));
    const auto pw = pat.word();
    return search(
        p.size(), pat_abs, [&](int i) { return std::abs(w[static_cast<std::size_t>(i)]); },
        [&](int pos0, int j) {
            return (w[static_cast<std::size_t>(pos0)] < 0) == (pw[static_cast<std::size_t>(j)] < 0);
        });
}

bool contains(const Permutation& p, const Permutation& pat) { return find_occurrence(p, pat).has_value(); }

bool contains(const SignedPermutation& p, const SignedPattern& pat)
{
    return find_occurrence(p, pat).has_value();
}

// ---------------------------------------------------------------------------

std::vector<Permutation> arc_forbidden()
{
    std::vector<Permutation> out;
    for (const Permutation& tau : generate_symmetric(4))
        if (std::abs(tau(1) - tau(2)) == 2)
            out.push_back(tau);
    return out;
}

Orientation triple_orientation(int a, int b, int c)
{
    if (a == b || b == c || a == c)
        throw std::invalid_argument("triple_orientation needs distinct values");
    const bool cw = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
    return cw ? Orientation::clockwise : Orientation::counterclockwise;
}

std::vector<SignedPattern> signed_arc_forbidden()
{
    std::vector<SignedPattern> out;
    for (const SignedPermutation& s : generate_hyperoctahedral(3)) {
        const int a = std::abs(s(1)), b = std::abs(s(2)), c = std::abs(s(3));
        const bool middle_negative = s(2) < 0;
        if (middle_negative == (triple_orientation(a, b, c) == Orientation::clockwise))
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPattern> b_arc_forbidden()
{
    const CircleOn circle{3};
    std::vector<SignedPattern> out;
    for (const SignedPermutation& s : generate_hyperoctahedral(3)) {
        const int d = std::abs(circle.point_to_index(s(2)) - circle.point_to_index(s(3)));
        if (std::min(d, 6 - d) >= 2)
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

AvoidanceResult<Permutation> avoids_all(const Permutation& p, const std::vector<Permutation>& patterns)
{
    return avoids_all_impl(p, patterns);
}

AvoidanceResult<SignedPattern> avoids_all(const SignedPermutation& p,
                                          const std::vector<SignedPattern>& patterns)
{
    return avoids_all_impl(p, patterns);
}

} // namespace arcperm
