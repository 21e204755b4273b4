#pragma once

// Generating polynomial of a finite set of permutations with respect to a
// chosen combination of statistics.

#include "arcperm/permutation.hpp"
#include "arcperm/polynomial.hpp"

#include <span>

namespace arcperm {

/// Which statistics a permutation contributes to its weight monomial.
///
/// The weight of pi is chi(pi) * t^{T(pi)} * q^{Q(pi)} * prod_{i in Des} x_{i+shift}
/// * prod_{i in Neg} y_i, each factor present only when selected. Type-B
/// statistics are used throughout; `inv` means inv(|pi|).
struct WeightSpec {
    enum class TStat { none, inv, des, fdes };
    enum class QStat { none, maj, fmaj };

    TStat t = TStat::none;
    QStat q = QStat::none;
    bool descent_set = false;
    int descent_shift = 0;
    bool negative_set = false;
    Character character = Character::trivial;
};

Polynomial weight(const SignedPermutation& p, const WeightSpec& spec);

Polynomial enumerator(std::span<const SignedPermutation> set, const WeightSpec& spec);
Polynomial enumerator(std::span<const Permutation> set, const WeightSpec& spec);

} // namespace arcperm
