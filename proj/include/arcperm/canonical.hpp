#pragma once

// Canonical factorizations into powers of the cyclic elements c_m.
//
// Type A: c_m = (m+1, m, ..., 1) in S_n, and every pi has a unique expression
//   pi = c_{n-1}^{k_{n-1}} ... c_1^{k_1},            0 <= k_i <= i.
// Type B: c_m = [-(m+1), 1, 2, ..., m, m+2, ..., n] in B_n, and
//   pi = c_{n-1}^{k_{n-1}} ... c_1^{k_1} c_0^{k_0},  0 <= k_i <= 2i+1.
//
// Products are read right to left with (p * q)(i) = p(q(i)).

#include "arcperm/permutation.hpp"

#include <string>
#include <vector>

namespace arcperm {

/// Exponents (k_1, ..., k_{n-1}); `k[i-1]` holds k_i.
struct ExponentVectorA {
    int n = 1;
    std::vector<int> k;

    int exponent(int i) const { return k[static_cast<std::size_t>(i - 1)]; }
    bool operator==(const ExponentVectorA&) const = default;
};

/// Exponents (k_0, ..., k_{n-1}); `k[i]` holds k_i.
struct ExponentVectorB {
    int n = 1;
    std::vector<int> k;

    int exponent(int i) const { return k[static_cast<std::size_t>(i)]; }
    bool operator==(const ExponentVectorB&) const = default;
};

/// c_m in S_n, 1 <= m < n. Throws std::out_of_range otherwise.
Permutation cycle_A(int m, int n);
/// c_m in B_n, 0 <= m < n. Throws std::out_of_range otherwise.
SignedPermutation cycle_B(int m, int n);

ExponentVectorA decompose_A(const Permutation& p);
ExponentVectorB decompose_B(const SignedPermutation& p);

/// Throws std::invalid_argument if an exponent violates its bound.
Permutation recompose(const ExponentVectorA& e);
SignedPermutation recompose(const ExponentVectorB& e);

/// Sum of the exponents; equals maj of the recomposed permutation.
int maj_from_exponents(const ExponentVectorA& e);
/// Sum of the exponents; equals fmaj of the recomposed permutation.
int fmaj_from_exponents(const ExponentVectorB& e);

/// 0 <= k_{n-1} <= n-1 and k_i in {0, i} for 1 <= i <= n-2.
bool is_arc_by_exponents(const ExponentVectorA& e);
/// 0 <= k_{n-1} <= 2n-1 and k_i in {0, 2i+1} for 0 <= i <= n-2.
bool is_b_arc_by_exponents(const ExponentVectorB& e);

/// Every exponent vector satisfying is_arc_by_exponents (resp. the B version).
std::vector<ExponentVectorA> arc_exponent_vectors(int n);
std::vector<ExponentVectorB> b_arc_exponent_vectors(int n);

/// "A k=[0,2]" / "B k=[1]".
std::string to_string(const ExponentVectorA& e);
std::string to_string(const ExponentVectorB& e);

} // namespace arcperm
