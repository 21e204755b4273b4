#pragma once

// Closed-form generating polynomials for arc permutations and their type-B
// analogues. Rational displays are returned in cleared polynomial form; the one
// genuine quotient, the (fdes, fmaj) polynomial of B-arc permutations, goes
// through exact_div so its divisibility is checked on every call.
//
// Variables: t, q as in the statistics they mark, x_i for a descent at
// position i, y_i for a negative entry at position i.
//
// Every function throws std::domain_error when n is outside the range where
// its literal form is defined.

#include "arcperm/permutation.hpp"
#include "arcperm/polynomial.hpp"

namespace arcperm::formulas {

// --- arc permutations A_n ---------------------------------------------------

/// sum t^inv x^Des over A_n, n >= 2.
Polynomial arc_inv_descent_set(int n);
/// sum x^Des over A_n, n >= 2.
Polynomial arc_descent_set(int n);
/// sum t^des q^maj over A_n as the literal product; n >= 2 (the product does
/// not match the enumeration at n = 2, see the verifier).
Polynomial arc_des_maj(int n);
/// sum t^des over A_n, (1+t)^(n-3) (1 + 2(n-1)t + t^2); n >= 3.
Polynomial arc_des(int n);
/// sum q^maj over A_n, n >= 2.
Polynomial arc_maj(int n);
/// sum sign q^maj over A_n, n >= 2.
Polynomial arc_signed_maj(int n);
/// sum sign x^Des over A_n, obtained from arc_inv_descent_set at t = -1; n >= 2.
Polynomial arc_signed_descent_set(int n);
/// The simplified product form of arc_signed_descent_set, even n >= 2 only.
Polynomial arc_signed_descent_set_even(int n);

/// sum x^Des over L_n, n >= 1.
Polynomial left_unimodal_descent_set(int n);

// --- signed arc permutations A^s_n ------------------------------------------

/// sum x^Des y^Neg over A^s_n, n >= 1.
Polynomial signed_arc_des_neg(int n);
/// sum t^inv(|pi|) x^Des y^Neg over A^s_n, n >= 1.
Polynomial signed_arc_des_neg_inv(int n);
/// sum t^fdes q^fmaj over A^s_n as the literal product; n >= 2 (at n = 2 the
/// empty product leaves an extra factor 1+t^2 q^3, see the verifier).
Polynomial signed_arc_fdes_fmaj(int n);
/// sum t^fdes over A^s_n, n >= 3.
Polynomial signed_arc_fdes(int n);
/// sum chi(pi) q^fmaj over A^s_n, n >= 1.
Polynomial signed_arc_character_fmaj(int n, Character chi);

// --- B-arc permutations A^B_n ------------------------------------------------

/// sum chi(pi) q^fmaj over A^B_n, n >= 1.
Polynomial b_arc_character_fmaj(int n, Character chi);
/// sum t^fdes q^fmaj over A^B_n, n >= 2; computed as a quotient by (1 - q).
Polynomial b_arc_fdes_fmaj(int n);
/// sum t^fdes over A^B_n, n >= 3.
Polynomial b_arc_fdes(int n);
/// sum x^Des over A^B_n, n >= 2.
Polynomial b_arc_descent_set(int n);

} // namespace arcperm::formulas
