#pragma once

// Permutations of S_n and signed permutations of B_n in one-line (window)
// notation, together with the descent statistics used throughout the library.
//
// Positions are 1-based in every public function.

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcperm {

/// Raised for malformed textual permutations and invalid words.
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// An element of S_n stored as its one-line word pi(1) ... pi(n).
class Permutation {
  public:
    /// Throws ParseError unless `word` is a bijection of {1..n}, n >= 1.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }

    /// pi(i) for 1 <= i <= n.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    std::span<const int> word() const { return word_; }

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> word_;
};

/// An element of B_n in window notation [pi(1), ..., pi(n)].
///
/// The extension pi(-a) = -pi(a) is implicit; operator() evaluates it for
/// negative arguments.
class SignedPermutation {
  public:
    /// Throws ParseError unless the entrywise absolute values form a
    /// permutation of {1..n} (so in particular no entry is zero).
    explicit SignedPermutation(std::vector<int> word);

    static SignedPermutation identity(int n);

    /// Embeds S_n in B_n (all entries positive).
    static SignedPermutation from_unsigned(const Permutation& p);

    int size() const { return static_cast<int>(word_.size()); }

    /// pi(a) for a in {+-1..+-n}.
    int operator()(int a) const
    {
        return a > 0 ? word_[static_cast<std::size_t>(a - 1)]
                     : -word_[static_cast<std::size_t>(-a - 1)];
    }

    std::span<const int> word() const { return word_; }

    auto operator<=>(const SignedPermutation&) const = default;

  private:
    std::vector<int> word_;
};

/// Position sets (descents, negative positions) as sorted 1-based positions.
using PositionSet = std::vector<int>;

// ---------------------------------------------------------------------------
// Type A statistics

PositionSet descent_set(const Permutation& p);
int des(const Permutation& p);
int maj(const Permutation& p);
int inv(const Permutation& p);
/// (-1)^inv(p).
int sign(const Permutation& p);

// ---------------------------------------------------------------------------
// Type B statistics

/// Sort key realizing the order -1 < -2 < ... < -n < 1 < 2 < ... < n.
/// Every type-B descent computation goes through this key.
constexpr std::pair<int, int> b_order_key(int v)
{
    return v < 0 ? std::pair{0, -v} : std::pair{1, v};
}

constexpr bool b_less(int a, int b) { return b_order_key(a) < b_order_key(b); }

PositionSet descent_set(const SignedPermutation& p);
PositionSet negative_set(const SignedPermutation& p);

/// |pi| = |pi(1)| |pi(2)| ... |pi(n)|.
Permutation absolute(const SignedPermutation& p);

/// Every statistic of one signed permutation.
///
/// `inv` is always inv(|pi|); `sign` is (-1)^(inv(|pi|) + neg(pi)).
struct StatProfile {
    PositionSet des_set;
    int des = 0;
    int maj = 0;
    int inv = 0;
    PositionSet neg_set;
    int neg = 0;
    int fmaj = 0;
    int fdes = 0;
    int sign = 1;
    int sign_abs = 1;
    int neg_parity = 1;

    bool operator==(const StatProfile&) const = default;
};

StatProfile stats(const SignedPermutation& p);
StatProfile stats(const Permutation& p);

// ---------------------------------------------------------------------------
// One-dimensional characters of B_n

enum class Character { trivial, sign, neg_parity, sign_abs };

inline constexpr Character all_characters[] = {Character::trivial, Character::sign,
                                               Character::neg_parity, Character::sign_abs};

int character_value(Character chi, const SignedPermutation& p);
std::string_view to_string(Character chi);
/// Accepts "trivial", "sign", "neg_parity", "sign_abs".
Character parse_character(std::string_view name);

// ---------------------------------------------------------------------------
// Group operations. (p * q)(i) = p(q(i)).

Permutation compose(const Permutation& p, const Permutation& q);
SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
Permutation inverse(const Permutation& p);
SignedPermutation inverse(const SignedPermutation& p);
/// Integer powers, negative exponents allowed.
Permutation power(const Permutation& p, long long e);
SignedPermutation power(const SignedPermutation& p, long long e);

// ---------------------------------------------------------------------------
// Text form

/// "[3,1,2]".
std::string to_string(const Permutation& p);
/// "[-3,-2,4,1]".
std::string to_string(const SignedPermutation& p);

/// Parses "[-3,-2,4,1]" (whitespace tolerated) or a compact digit string
/// such as "12543" (n <= 9, no signs).
SignedPermutation parse_signed_permutation(std::string_view text);
/// As parse_signed_permutation, but negative entries are rejected.
Permutation parse_permutation(std::string_view text);

} // namespace arcperm
