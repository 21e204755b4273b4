#pragma once

// Exact sparse multivariate polynomials with arbitrary-precision integer
// coefficients.
//
// Terms are kept in a map keyed by monomial under graded lexicographic order
// with t > q > u > y > z > x_0 > x_1 > ... > y_1 > y_2 > ...; no zero
// coefficient is ever stored, so structural equality is polynomial equality.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcperm {

using Integer = boost::multiprecision::cpp_int;

class Variable {
  public:
    // Declaration order is the variable order.
    enum class Kind : std::uint8_t { t, q, u, y, z, x_indexed, y_indexed };

    static Variable t() { return Variable(Kind::t, 0); }
    static Variable q() { return Variable(Kind::q, 0); }
    static Variable u() { return Variable(Kind::u, 0); }
    static Variable y() { return Variable(Kind::y, 0); }
    static Variable z() { return Variable(Kind::z, 0); }
    /// x_i, i >= 0.
    static Variable x(int i);
    /// y_i, i >= 1.
    static Variable y(int i);

    /// Inverse of name(): "t", "q", "u", "y", "z", "x_3", "y_1".
    static Variable parse(std::string_view name);

    Kind kind() const { return kind_; }
    int index() const { return index_; }
    std::string name() const;

    auto operator<=>(const Variable&) const = default;

  private:
    Variable(Kind kind, int index) : kind_(kind), index_(index) {}

    Kind kind_;
    int index_;
};

/// A power product: (variable, exponent) pairs sorted by variable, exponents >= 1.
class Monomial {
  public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<Variable, int>> factors);

    const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }
    int degree() const;
    int exponent(Variable v) const;
    bool is_one() const { return factors_.empty(); }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// other / *this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;

  private:
    std::vector<std::pair<Variable, int>> factors_;

    friend class MonomialBuilder;
};

/// Accumulates variable powers in any order into a canonical Monomial.
class MonomialBuilder {
  public:
    MonomialBuilder& mul(Variable v, int e = 1);
    Monomial build() const;

  private:
    std::map<Variable, int> exps_;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// first variable (in variable order) where the monomials differ.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Integer, GrlexLess>;

    Polynomial() = default;
    Polynomial(long long c);
    Polynomial(const Integer& c);
    Polynomial(const Variable& v);
    Polynomial(const Monomial& m, const Integer& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Integer coefficient(const Monomial& m) const;
    std::set<Variable> variables() const;
    /// Largest total degree; -1 for the zero polynomial.
    int degree() const;
    /// Sum of all coefficients, i.e. the value with every variable set to 1.
    Integer coefficient_sum() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    /// Adds c * m.
    void add_term(const Monomial& m, const Integer& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    bool operator==(const Polynomial&) const = default;

  private:
    TermMap terms_;
};

Polynomial pow(const Polynomial& base, unsigned e);

/// Image under the ring homomorphism sending each bound variable to its
/// binding; unbound variables map to themselves.
Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& bindings);

/// [n]_base = 1 + base + base^2 + ... + base^(n-1); zero for n = 0.
Polynomial q_bracket(int n, const Polynomial& base);

/// Raised by exact_div when the divisor does not divide the dividend.
class InexactDivision : public std::domain_error {
  public:
    InexactDivision(Polynomial remainder);
    const Polynomial& remainder() const { return remainder_; }

  private:
    Polynomial remainder_;
};

/// The quotient p / d. Throws InexactDivision carrying the nonzero remainder
/// if d does not divide p, std::domain_error if d is zero.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

/// "1 + 4*t + t^2"; terms in increasing graded lex order. "0" for zero.
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m);

} // namespace arcperm
