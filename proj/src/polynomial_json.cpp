#include "arcperm/polynomial_json.hpp"

namespace arcperm {

nlohmann::json to_json(const Polynomial& p)
{
    auto terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        auto mono = nlohmann::json::object();
        for (const auto& [v, e] : m.factors())
            mono[v.name()] = e;
        terms.push_back({{"coeff", c.str()}, {"monomial", std::move(mono)}});
    }
    return terms;
}

Polynomial polynomial_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array of terms");
    Polynomial p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("monomial") ||
            !term["coeff"].is_string() || !term["monomial"].is_object())
            throw std::invalid_argument("malformed polynomial term: " + term.dump());
        MonomialBuilder b;
        for (const auto& [name, e] : term["monomial"].items()) {
            if (!e.is_number_integer() || e.get<int>() < 1)
                throw std::invalid_argument("bad exponent for " + name);
            b.mul(Variable::parse(name), e.get<int>());
        }
        Integer c;
        try {
            c = Integer(term["coeff"].get<std::string>());
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient " + term["coeff"].dump());
        }
        p.add_term(b.build(), c);
    }
    return p;
}

} // namespace arcperm
