#include "arcperm/polynomial.hpp"

#include <algorithm>
#include <charconv>

namespace arcperm {

Variable Variable::x(int i)
{
    if (i < 0)
        throw std::invalid_argument("x_i needs i >= 0");
    return Variable(Kind::x_indexed, i);
}

Variable Variable::y(int i)
{
    if (i < 1)
        throw std::invalid_argument("y_i needs i >= 1");
    return Variable(Kind::y_indexed, i);
}

Variable Variable::parse(std::string_view name)
{
    if (name == "t")
        return t();
    if (name == "q")
        return q();
    if (name == "u")
        return u();
    if (name == "y")
        return y();
    if (name == "z")
        return z();
    if (name.size() > 2 && name[1] == '_' && (name[0] == 'x' || name[0] == 'y')) {
        int i = 0;
        const auto digits = name.substr(2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (ec == std::errc{} && ptr == digits.data() + digits.size())
            return name[0] == 'x' ? x(i) : y(i);
    }
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

std::string Variable::name() const
{
    switch (kind_) {
    case Kind::t:
        return "t";
    case Kind::q:
        return "q";
    case Kind::u:
        return "u";
    case Kind::y:
        return "y";
    case Kind::z:
        return "z";
    case Kind::x_indexed:
        return "x_" + std::to_string(index_);
    case Kind::y_indexed:
        return "y_" + std::to_string(index_);
    }
    return "?";
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::initializer_list<std::pair<Variable, int>> factors)
{
    MonomialBuilder b;
    for (const auto& [v, e] : factors)
        b.mul(v, e);
    *this = b.build();
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto& f : factors_)
        d += f.second;
    return d;
}

int Monomial::exponent(Variable v) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const auto& f, const Variable& x) { return f.first < x; });
    return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
            r.factors_.push_back(*a++);
        else if (a == factors_.end() || b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const
{
    for (const auto& [v, e] : factors_)
        if (other.exponent(v) < e)
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    MonomialBuilder b;
    for (const auto& [v, e] : other.factors_) {
        const int r = e - exponent(v);
        if (r < 0)
            throw std::domain_error("monomial does not divide");
        if (r > 0)
            b.mul(v, r);
    }
    return b.build();
}

MonomialBuilder& MonomialBuilder::mul(Variable v, int e)
{
    if (e < 0)
        throw std::invalid_argument("negative exponent");
    if (e > 0)
        exps_[v] += e;
    return *this;
}

Monomial MonomialBuilder::build() const
{
    Monomial m;
    m.factors_.assign(exps_.begin(), exps_.end());
    return m;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.begin(), ib = fb.begin();
    while (ia != fa.end() && ib != fb.end()) {
        if (ia->first != ib->first)
            // the monomial carrying the earlier variable has the larger exponent there
            return ib->first < ia->first;
        if (ia->second != ib->second)
            return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == fa.end() && ib != fb.end();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(long long c) : Polynomial(Integer(c)) {}

Polynomial::Polynomial(const Integer& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Variable& v) { terms_.emplace(Monomial{{v, 1}}, 1); }

Polynomial::Polynomial(const Monomial& m, const Integer& c)
{
    if (c != 0)
        terms_.emplace(m, c);
}

Integer Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::set<Variable> Polynomial::variables() const
{
    std::set<Variable> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors())
            vs.insert(f.first);
    return vs;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

Integer Polynomial::coefficient_sum() const
{
    Integer s = 0;
    for (const auto& [m, c] : terms_)
        s += c;
    return s;
}

void Polynomial::add_term(const Monomial& m, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial pow(const Polynomial& base, unsigned e)
{
    Polynomial result = 1;
    Polynomial b = base;
    while (e) {
        if (e & 1)
            result *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& bindings)
{
    // powers[v][e] caches binding(v)^e
    std::map<Variable, std::vector<Polynomial>> powers;
    auto power_of = [&](const Variable& v, int e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) {
            auto it = bindings.find(v);
            cache.push_back(1);
            cache.push_back(it == bindings.end() ? Polynomial(v) : it->second);
        }
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * cache[1]);
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = c;
        for (const auto& [v, e] : m.factors())
            term *= power_of(v, e);
        result += term;
    }
    return result;
}

Polynomial q_bracket(int n, const Polynomial& base)
{
    if (n < 0)
        throw std::invalid_argument("q_bracket needs n >= 0");
    Polynomial sum;
    Polynomial power = 1;
    for (int j = 0; j < n; ++j) {
        sum += power;
        power *= base;
    }
    return sum;
}

InexactDivision::InexactDivision(Polynomial remainder)
    : std::domain_error("inexact polynomial division, remainder " + to_string(remainder)),
      remainder_(std::move(remainder))
{
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d)
{
    if (d.is_zero())
        throw std::domain_error("division by the zero polynomial");
    const auto& [lead_m, lead_c] = *d.terms().rbegin();
    Polynomial rest = p;
    Polynomial quotient;
    Polynomial remainder;
    while (!rest.is_zero()) {
        const Monomial m = rest.terms().rbegin()->first;
        const Integer c = rest.terms().rbegin()->second;
        if (lead_m.divides(m) && c % lead_c == 0) {
            const Polynomial step(lead_m.quotient_of(m), c / lead_c);
            quotient += step;
            rest -= step * d;
        } else {
            remainder.add_term(m, c);
            rest.add_term(m, -c);
        }
    }
    if (!remainder.is_zero())
        throw InexactDivision(std::move(remainder));
    return quotient;
}

// ---------------------------------------------------------------------------

std::string to_string(const Monomial& m)
{
    if (m.is_one())
        return "1";
    std::string s;
    for (const auto& [v, e] : m.factors()) {
        if (!s.empty())
            s += '*';
        s += v.name();
        if (e != 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (m.is_one())
            s += mag.str();
        else if (mag == 1)
            s += to_string(m);
        else
            s += mag.str() + "*" + to_string(m);
    }
    return s;
}

} // namespace arcperm
