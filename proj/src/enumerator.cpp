#include "arcperm/enumerator.hpp"

namespace arcperm {

namespace {

Monomial weight_monomial(const StatProfile& s, const WeightSpec& spec)
{
    MonomialBuilder b;
    switch (spec.t) {
    case WeightSpec::TStat::none:
        break;
    case WeightSpec::TStat::inv:
        b.mul(Variable::t(), s.inv);
        break;
    case WeightSpec::TStat::des:
        b.mul(Variable::t(), s.des);
        break;
    case WeightSpec::TStat::fdes:
        b.mul(Variable::t(), s.fdes);
        break;
    }
    switch (spec.q) {
    case WeightSpec::QStat::none:
        break;
    case WeightSpec::QStat::maj:
        b.mul(Variable::q(), s.maj);
        break;
    case WeightSpec::QStat::fmaj:
        b.mul(Variable::q(), s.fmaj);
        break;
    }
    if (spec.descent_set)
        for (int i : s.des_set)
            b.mul(Variable::x(i + spec.descent_shift));
    if (spec.negative_set)
        for (int i : s.neg_set)
            b.mul(Variable::y(i));
    return b.build();
}

int character_from_profile(Character chi, const StatProfile& s)
{
    switch (chi) {
    case Character::trivial:
        return 1;
    case Character::sign:
        return s.sign;
    case Character::neg_parity:
        return s.neg_parity;
    case Character::sign_abs:
        return s.sign_abs;
    }
    return 1;
}

} // namespace

Polynomial weight(const SignedPermutation& p, const WeightSpec& spec)
{
    const StatProfile s = stats(p);
    return Polynomial(weight_monomial(s, spec), character_from_profile(spec.character, s));
}

Polynomial enumerator(std::span<const SignedPermutation> set, const WeightSpec& spec)
{
    Polynomial sum;
    for (const auto& p : set) {
        const StatProfile s = stats(p);
        sum.add_term(weight_monomial(s, spec), character_from_profile(spec.character, s));
    }
    return sum;
}

Polynomial enumerator(std::span<const Permutation> set, const WeightSpec& spec)
{
    Polynomial sum;
    for (const auto& p : set) {
        const StatProfile s = stats(p);
        sum.add_term(weight_monomial(s, spec), character_from_profile(spec.character, s));
    }
    return sum;
}

} // namespace arcperm
