#include "arcperm/formulas.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace arcperm::formulas {

namespace {

const Polynomial t = Variable::t();
const Polynomial q = Variable::q();

Polynomial x(int i) { return Variable::x(i); }
Polynomial y(int i) { return Variable::y(i); }

/// Monomial c * v^e for a single variable.
Polynomial power_of(const Variable& v, int e) { return Monomial{{v, e}}; }
Polynomial tp(int e) { return power_of(Variable::t(), e); }
Polynomial qp(int e) { return power_of(Variable::q(), e); }

int sgn(int e) { return e % 2 == 0 ? 1 : -1; }

/// prod_{i=lo}^{hi} f(i); empty products are 1.
Polynomial product(int lo, int hi, const std::function<Polynomial(int)>& f)
{
    Polynomial r = 1;
    for (int i = lo; i <= hi; ++i)
        r *= f(i);
    return r;
}

void require(bool ok, const char* name, int n, const char* range)
{
    if (!ok)
        throw std::domain_error(std::string(name) + " is stated for " + range + ", got n=" + std::to_string(n));
}

/// prod_{i=1}^{n-1} (1+x_i) * (1 + sum_{j=1}^{n-2} (x_j+x_{j+1}) / ((1+x_j)(1+x_{j+1}))),
/// returned as the pair (full product, cleared sum).
std::pair<Polynomial, Polynomial> cleared_descent_parts(int n)
{
    auto factor = [](int i) { return 1 + x(i); };
    Polynomial full = product(1, n - 1, factor);
    Polynomial sum;
    for (int j = 1; j <= n - 2; ++j)
        sum += (x(j) + x(j + 1)) * product(1, j - 1, factor) * product(j + 2, n - 1, factor);
    return {full, sum};
}

Polynomial drop_x0(const Polynomial& p) { return substitute(p, {{Variable::x(0), 1}}); }

} // namespace

// ---------------------------------------------------------------------------

Polynomial arc_inv_descent_set(int n)
{
    require(n >= 2, "arc_inv_descent_set", n, "n >= 2");
    Polynomial r = product(1, n - 1, [](int i) { return 1 + tp(i) * x(i); });
    for (int j = 1; j <= n - 2; ++j) {
        r += (tp(j * (n - j)) * x(j) + tp(n - j - 1) * x(j + 1)) *
             product(1, j - 1, [](int i) { return 1 + tp(i) * x(i); }) *
             product(j + 2, n - 1, [n](int i) { return 1 + tp(n - i) * x(i); });
    }
    return r;
}

Polynomial arc_descent_set(int n)
{
    require(n >= 2, "arc_descent_set", n, "n >= 2");
    auto [full, sum] = cleared_descent_parts(n);
    return full + sum;
}

Polynomial arc_des_maj(int n)
{
    require(n >= 2, "arc_des_maj", n, "n >= 2");
    return product(2, n - 2, [](int i) { return 1 + t * qp(i); }) *
           (1 + 2 * t * q * q_bracket(n - 1, q) + pow(t, 2) * qp(n));
}

Polynomial arc_des(int n)
{
    require(n >= 3, "arc_des", n, "n >= 3");
    return pow(1 + t, static_cast<unsigned>(n - 3)) * (1 + 2 * (n - 1) * t + pow(t, 2));
}

Polynomial arc_maj(int n)
{
    require(n >= 2, "arc_maj", n, "n >= 2");
    return q_bracket(n, q) * product(1, n - 2, [](int i) { return 1 + qp(i); });
}

Polynomial arc_signed_maj(int n)
{
    require(n >= 2, "arc_signed_maj", n, "n >= 2");
    return q_bracket(n, sgn(n - 1) * q) * product(1, n - 2, [](int i) { return 1 + sgn(i) * qp(i); });
}

Polynomial arc_signed_descent_set(int n)
{
    require(n >= 2, "arc_signed_descent_set", n, "n >= 2");
    return substitute(arc_inv_descent_set(n), {{Variable::t(), -1}});
}

Polynomial arc_signed_descent_set_even(int n)
{
    require(n >= 2 && n % 2 == 0, "arc_signed_descent_set_even", n, "even n >= 2");
    auto factor = [](int i) { return 1 + sgn(i) * x(i); };
    Polynomial r = product(1, n - 1, factor);
    for (int j = 1; j <= n - 2; ++j)
        r += sgn(j) * (x(j) - x(j + 1)) * product(1, j - 1, factor) * product(j + 2, n - 1, factor);
    return r;
}

Polynomial left_unimodal_descent_set(int n)
{
    require(n >= 1, "left_unimodal_descent_set", n, "n >= 1");
    return product(1, n - 1, [](int i) { return 1 + x(i); });
}

// ---------------------------------------------------------------------------

Polynomial signed_arc_des_neg(int n)
{
    require(n >= 1, "signed_arc_des_neg", n, "n >= 1");
    // x_0 is kept as a variable until the end, then set to 1
    auto factor = [](int i) { return 1 + x(i - 1) * y(i); };
    Polynomial r = product(1, n, factor);
    for (int j = 1; j <= n - 1; ++j)
        r += (x(j) + x(j - 1) * y(j)) * (1 + y(j + 1)) * product(1, j - 1, factor) * product(j + 2, n, factor);
    return drop_x0(r);
}

Polynomial signed_arc_des_neg_inv(int n)
{
    require(n >= 1, "signed_arc_des_neg_inv", n, "n >= 1");
    auto head = [](int i) { return 1 + tp(i - 1) * x(i - 1) * y(i); };
    Polynomial r = product(1, n, head);
    for (int j = 1; j <= n - 1; ++j)
        r += (x(j) + tp(j - 1) * x(j - 1) * y(j)) * (tp(j * (n - j)) + tp(n - j - 1) * y(j + 1)) *
             product(1, j - 1, head) *
             product(j + 2, n, [n](int i) { return 1 + tp(n - i) * x(i - 1) * y(i); });
    return drop_x0(r);
}

Polynomial signed_arc_fdes_fmaj(int n)
{
    require(n >= 2, "signed_arc_fdes_fmaj", n, "n >= 2");
    const Polynomial t2 = pow(t, 2);
    const Polynomial middle = 1 + t * q * (1 + q) + 2 * t2 * qp(3) * q_bracket(2 * n - 3, q) +
                              pow(t, 3) * qp(2 * n) * (1 + q) + pow(t, 4) * qp(2 * n + 2);
    return (1 + t * q) * middle * product(3, n - 1, [&](int i) { return 1 + t2 * qp(2 * i - 1); });
}

Polynomial signed_arc_fdes(int n)
{
    require(n >= 3, "signed_arc_fdes", n, "n >= 3");
    const Polynomial t2 = pow(t, 2);
    return (1 + t) * pow(1 + t2, static_cast<unsigned>(n - 3)) *
           (1 + 2 * t + (4 * n - 6) * t2 + 2 * pow(t, 3) + pow(t, 4));
}

Polynomial signed_arc_character_fmaj(int n, Character chi)
{
    require(n >= 1, "signed_arc_character_fmaj", n, "n >= 1");
    const bool odd = n % 2 == 1;
    const Polynomial minus_q2 = -pow(q, 2);
    switch (chi) {
    case Character::trivial:
        return q_bracket(2 * n, q) * product(1, n - 1, [](int i) { return 1 + qp(2 * i - 1); });
    case Character::sign: {
        Polynomial tail = product(1, n - 1, [](int i) { return 1 + sgn(i) * qp(2 * i - 1); });
        return odd ? (1 - q) * q_bracket(n, minus_q2) * tail : q_bracket(2 * n, q) * tail;
    }
    case Character::neg_parity:
        return q_bracket(2 * n, -q) * product(1, n - 1, [](int i) { return 1 - qp(2 * i - 1); });
    case Character::sign_abs: {
        Polynomial tail = product(1, n - 1, [](int i) { return 1 + sgn(i - 1) * qp(2 * i - 1); });
        return odd ? (1 + q) * q_bracket(n, minus_q2) * tail : q_bracket(2 * n, -q) * tail;
    }
    }
    return 0;
}

// ---------------------------------------------------------------------------

Polynomial b_arc_character_fmaj(int n, Character chi)
{
    require(n >= 1, "b_arc_character_fmaj", n, "n >= 1");
    switch (chi) {
    case Character::trivial:
        return q_bracket(2 * n, q) * product(1, n - 1, [](int i) { return 1 + qp(2 * i - 1); });
    case Character::sign:
        return q_bracket(2 * n, sgn(n) * q) * product(1, n - 1, [](int i) { return 1 + sgn(i) * qp(2 * i - 1); });
    case Character::neg_parity:
        return q_bracket(2 * n, -q) * product(1, n - 1, [](int i) { return 1 - qp(2 * i - 1); });
    case Character::sign_abs:
        return q_bracket(2 * n, sgn(n - 1) * q) *
               product(1, n - 1, [](int i) { return 1 + sgn(i - 1) * qp(2 * i - 1); });
    }
    return 0;
}

Polynomial b_arc_fdes_fmaj(int n)
{
    require(n >= 2, "b_arc_fdes_fmaj", n, "n >= 2");
    const Polynomial t2 = pow(t, 2);
    const Polynomial odd_prod = product(1, n - 2, [&](int i) { return 1 + t2 * qp(2 * i + 1); });
    const Polynomial even_prod = product(1, n - 2, [&](int i) { return 1 + t2 * qp(2 * i + 2); });
    const Polynomial numerator =
        (1 + t * q) * (1 + t * qp(n)) * ((1 - t * qp(n)) * odd_prod - (1 - t) * q * even_prod);
    return exact_div(numerator, 1 - q);
}

Polynomial b_arc_fdes(int n)
{
    require(n >= 3, "b_arc_fdes", n, "n >= 3");
    return pow(1 + t, 3) * pow(1 + pow(t, 2), static_cast<unsigned>(n - 3)) * (1 + (n - 2) * t + pow(t, 2));
}

Polynomial b_arc_descent_set(int n)
{
    require(n >= 2, "b_arc_descent_set", n, "n >= 2");
    auto [full, sum] = cleared_descent_parts(n);
    return (2 + n) * full + 2 * sum;
}

} // namespace arcperm::formulas
