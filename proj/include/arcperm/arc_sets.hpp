#pragma once

// Membership predicates and generators for arc permutations A_n,
// left-unimodal permutations L_n, signed arc permutations A^s_n and
// B-arc permutations A^B_n, plus exhaustive S_n / B_n generators.

#include "arcperm/permutation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arcperm {

/// Raised when an exhaustive generator is asked for more than its guard.
class SizeLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// The circle O_n: labels -1,...,-n,1,...,n clockwise, i.e. the bijection
/// j -> j-1 and -j -> n+j-1 onto Z_{2n}.
struct CircleOn {
    int n;

    int point_to_index(int v) const;
    int index_to_point(int idx) const;
};

/// Whether `values` (each in 1..n) is a cyclic interval of Z_n. The empty and
/// the full set both count. Throws std::invalid_argument for values out of range.
bool is_interval_Zn(std::span<const int> values, int n);

/// Whether `values` (each in +-1..+-n) maps to a cyclic interval of Z_{2n}
/// under CircleOn::point_to_index.
bool is_interval_On(std::span<const int> values, int n);

bool is_arc(const Permutation& p);
bool is_left_unimodal(const Permutation& p);
bool is_signed_arc(const SignedPermutation& p);
bool is_b_arc(const SignedPermutation& p);

/// First place where the defining condition breaks, for diagnostics.
struct DefinitionFailure {
    int position;        ///< 1-based prefix end (A, L, A^s) or suffix start (A^B)
    std::string reason;
};

std::optional<DefinitionFailure> arc_failure(const Permutation& p);
std::optional<DefinitionFailure> left_unimodal_failure(const Permutation& p);
std::optional<DefinitionFailure> signed_arc_failure(const SignedPermutation& p);
std::optional<DefinitionFailure> b_arc_failure(const SignedPermutation& p);

// Generators. All emit in a fixed order determined by the construction.

std::vector<Permutation> generate_arc(int n);
std::vector<Permutation> generate_left_unimodal(int n);
std::vector<SignedPermutation> generate_signed_arc(int n);
std::vector<SignedPermutation> generate_b_arc(int n);

inline constexpr int default_symmetric_limit = 9;
inline constexpr int default_hyperoctahedral_limit = 7;

/// All n! permutations in lexicographic order.
std::vector<Permutation> generate_symmetric(int n, int max_n = default_symmetric_limit);
/// All 2^n n! signed permutations.
std::vector<SignedPermutation> generate_hyperoctahedral(int n, int max_n = default_hyperoctahedral_limit);

/// The families the CLI and the verifier can enumerate.
enum class SetKind { arc, left_unimodal, signed_arc, b_arc, symmetric, hyperoctahedral };

std::string_view to_string(SetKind kind);
/// Accepts "arc", "left-unimodal", "signed-arc", "b-arc", "sym", "hyp".
SetKind parse_set_kind(std::string_view name);
bool is_signed_family(SetKind kind);

/// Members of a family as signed permutations (type-A families embedded positively).
std::vector<SignedPermutation> generate_family(SetKind kind, int n, bool unguarded = false);

} // namespace arcperm
