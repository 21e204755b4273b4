#pragma once

// Classical and signed pattern containment, and the forbidden-pattern lists
// characterizing A_n, A^s_n and A^B_n.

#include "arcperm/permutation.hpp"

#include <optional>
#include <vector>

namespace arcperm {

/// A pattern in B_k. Containment requires matching signs and order-isomorphic
/// absolute values.
using SignedPattern = SignedPermutation;

/// One occurrence: the pattern and the 1-based indices i_1 < ... < i_k.
template <class Pattern>
struct Occurrence {
    Pattern pattern;
    std::vector<int> indices;
};

/// Lexicographically first index tuple at which `pat` occurs in `p`.
std::optional<std::vector<int>> find_occurrence(const Permutation& p, const Permutation& pat);
std::optional<std::vector<int>> find_occurrence(const SignedPermutation& p, const SignedPattern& pat);

bool contains(const Permutation& p, const Permutation& pat);
bool contains(const SignedPermutation& p, const SignedPattern& pat);

/// The eight patterns tau in S_4 with |tau(1) - tau(2)| = 2.
std::vector<Permutation> arc_forbidden();
/// [+-a, -b, +-c] for clockwise (a,b,c) and [+-a, b, +-c] for counterclockwise (a,b,c).
std::vector<SignedPattern> signed_arc_forbidden();
/// [a, b, c] in B_3 with b and c at distance at least 2 on the circle O_3.
std::vector<SignedPattern> b_arc_forbidden();

enum class Orientation { clockwise, counterclockwise };

/// Clockwise iff a<b<c, b<c<a or c<a<b. Throws std::invalid_argument unless
/// a, b, c are distinct.
Orientation triple_orientation(int a, int b, int c);

template <class Pattern>
struct AvoidanceResult {
    bool avoids = true;
    std::optional<Occurrence<Pattern>> witness;

    explicit operator bool() const { return avoids; }
};

/// Whether `p` avoids every pattern in `patterns`. On failure the witness is
/// the occurrence with the lexicographically smallest index tuple (ties go to
/// the earlier pattern in the list).
AvoidanceResult<Permutation> avoids_all(const Permutation& p, const std::vector<Permutation>& patterns);
AvoidanceResult<SignedPattern> avoids_all(const SignedPermutation& p,
                                          const std::vector<SignedPattern>& patterns);

} // namespace arcperm
