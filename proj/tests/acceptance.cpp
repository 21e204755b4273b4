// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact
// (integer polynomials and counts); there are no numeric tolerances.

#include "cli.hpp"

#include "arcperm/arc_sets.hpp"
#include "arcperm/canonical.hpp"
#include "arcperm/enumerator.hpp"
#include "arcperm/formulas.hpp"
#include "arcperm/patterns.hpp"
#include "arcperm/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace arcperm;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(std::string why)
    {
        pass = false;
        if (details.size() < 10)
            details.push_back(std::move(why));
    }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  (" << ms << " ms)\n";
    for (const auto& d : o.details)
        std::cout << "      " << d << '\n';
    if (!o.pass)
        ++failures;
}

Outcome cardinalities()
{
    Outcome o;
    for (int n = 2; n <= 12; ++n)
        if (generate_arc(n).size() != (static_cast<std::size_t>(n) << (n - 2)))
            o.fail("|A_" + std::to_string(n) + "| wrong");
    for (int n = 1; n <= 12; ++n) {
        const auto expected = static_cast<std::size_t>(n) << n;
        if (generate_signed_arc(n).size() != expected)
            o.fail("|A^s_" + std::to_string(n) + "| wrong");
        if (generate_b_arc(n).size() != expected)
            o.fail("|A^B_" + std::to_string(n) + "| wrong");
    }
    return o;
}

Outcome pattern_characterizations()
{
    Outcome o;
    const auto arc_pats = arc_forbidden();
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : generate_symmetric(n))
            if (is_arc(p) != avoids_all(p, arc_pats).avoids)
                o.fail("arc counterexample " + to_string(p));
    const auto s_pats = signed_arc_forbidden();
    const auto b_pats = b_arc_forbidden();
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : generate_hyperoctahedral(n)) {
            if (is_signed_arc(p) != avoids_all(p, s_pats).avoids)
                o.fail("signed-arc counterexample " + to_string(p));
            if (is_b_arc(p) != avoids_all(p, b_pats).avoids)
                o.fail("b-arc counterexample " + to_string(p));
        }
    return o;
}

Outcome formula_identities()
{
    struct Range {
        std::string selector;
        int lo, hi;
    };
    const std::vector<Range> ranges{
        {"f_A_inv_des", 2, 8},       {"f_A_des_set", 2, 8},         {"f_A_maj", 2, 8},
        {"f_A_signed_maj", 2, 8},    {"f_sign_des_variants", 2, 8}, {"f_A_des_maj", 3, 8},
        {"f_A_des", 3, 8},           {"f_As_des_neg", 1, 8},        {"f_As_des_neg_inv", 1, 8},
        {"f_As_character_fmaj", 1, 8}, {"f_As_fdes_fmaj", 2, 8},    {"f_As_fdes", 3, 8},
        {"f_AB_character_fmaj", 1, 8}, {"f_AB_fdes_fmaj", 2, 8},    {"f_AB_des_set", 2, 8},
        {"f_AB_fdes", 3, 8},
    };
    Outcome o;
    const auto& reg = FormulaRegistry::standard();
    for (const auto& r : ranges) {
        const auto entries = reg.select(r.selector);
        if (entries.empty())
            o.fail("no formula " + r.selector);
        for (const FormulaEntry* e : entries) {
            int checked = 0;
            for (const auto& row : verify(*e, r.lo, r.hi)) {
                ++checked;
                if (row.status != VerificationStatus::equal)
                    o.fail(row.formula + " n=" + std::to_string(row.n) + " " + std::string(to_string(row.status)) +
                           ", diff " + to_string(row.diff));
            }
            if (checked == 0)
                o.fail(e->id + " produced no rows");
        }
    }
    return o;
}

Outcome canonical_forms()
{
    Outcome o;
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : generate_symmetric(n)) {
            const auto e = decompose_A(p);
            if (recompose(e) != p || maj_from_exponents(e) != maj(p) || is_arc_by_exponents(e) != is_arc(p))
                o.fail("type A failure at " + to_string(p));
        }
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : generate_hyperoctahedral(n)) {
            const auto e = decompose_B(p);
            if (recompose(e) != p || fmaj_from_exponents(e) != stats(p).fmaj || is_b_arc_by_exponents(e) != is_b_arc(p))
                o.fail("type B failure at " + to_string(p));
        }
    for (int n = 2; n <= 7; ++n)
        if (arc_exponent_vectors(n).size() != (static_cast<std::size_t>(n) << (n - 2)))
            o.fail("type A constraint set size wrong at n=" + std::to_string(n));
    for (int n = 1; n <= 6; ++n)
        if (b_arc_exponent_vectors(n).size() != (static_cast<std::size_t>(n) << n))
            o.fail("type B constraint set size wrong at n=" + std::to_string(n));
    return o;
}

Outcome equidistribution()
{
    Outcome o;
    for (int n = 1; n <= 10; ++n) {
        const auto sa = generate_signed_arc(n);
        const auto ba = generate_b_arc(n);
        for (Character chi : {Character::trivial, Character::sign}) {
            WeightSpec spec;
            spec.q = WeightSpec::QStat::fmaj;
            spec.character = chi;
            const bool equal = enumerator(sa, spec) == enumerator(ba, spec);
            const std::string where = std::string(to_string(chi)) + " n=" + std::to_string(n);
            if (chi == Character::trivial && !equal)
                o.fail("trivial character differs at " + where);
            if (chi == Character::sign && n % 2 == 0 && !equal)
                o.fail("sign character differs at even " + where);
            if (chi == Character::sign && n % 2 == 1 && n >= 3 && n <= 9 && equal)
                o.fail("sign character unexpectedly equal at odd " + where);
        }
    }
    return o;
}

Outcome spot_values()
{
    Outcome o;
    const Polynomial t = Variable::t();
    const Polynomial q = Variable::q();
    WeightSpec fdes;
    fdes.t = WeightSpec::TStat::fdes;
    WeightSpec des;
    des.t = WeightSpec::TStat::des;
    WeightSpec signed_maj;
    signed_maj.q = WeightSpec::QStat::maj;
    signed_maj.character = Character::sign;
    if (enumerator(generate_b_arc(2), fdes) != 1 + 3 * t + 3 * pow(t, 2) + pow(t, 3))
        o.fail("fdes on A^B_2");
    if (enumerator(generate_arc(3), des) != 1 + 4 * t + pow(t, 2))
        o.fail("des on A_3");
    if (enumerator(generate_arc(2), signed_maj) != 1 - q)
        o.fail("signed maj on A_2");
    return o;
}

Outcome exact_division_never_fails()
{
    Outcome o;
    for (int n = 2; n <= 10; ++n) {
        try {
            formulas::b_arc_fdes_fmaj(n);
        } catch (const InexactDivision& e) {
            o.fail("remainder at n=" + std::to_string(n) + ": " + to_string(e.remainder()));
        }
    }
    for (const auto& e : FormulaRegistry::standard().entries())
        for (const auto& row : verify(e, 1, 8))
            if (row.note.find("not divisible") != std::string::npos)
                o.fail(row.formula + " n=" + std::to_string(row.n) + " division remainder");
    return o;
}

Outcome negative_control()
{
    Outcome o;
    FormulaRegistry corrupted;
    FormulaEntry e = *FormulaRegistry::standard().select("f_A_maj").front();
    e.closed_form = [](int n) { return formulas::arc_maj(n) + Polynomial(Variable::q()); };
    corrupted.add(e);

    const auto rows = verify(e, 2, 6);
    for (const auto& r : rows)
        if (r.status != VerificationStatus::mismatch || r.diff.is_zero())
            o.fail("corrupted row at n=" + std::to_string(r.n) + " not reported as MISMATCH");

    std::ostringstream out, err;
    const int code = cli::run({"verify", "--formula", "f_A_maj", "--n-max", "6"}, out, err, corrupted);
    if (code == 0)
        o.fail("verify exited 0 on a corrupted formula");
    if (out.str().find("MISMATCH") == std::string::npos)
        o.fail("verify output lacks MISMATCH");
    return o;
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    criterion(1, "cardinalities of A_n (2..12), A^s_n and A^B_n (1..12)", cardinalities);
    criterion(2, "pattern characterizations (S_n n<=7, B_n n<=6)", pattern_characterizations);
    criterion(3, "closed forms equal enumerations over the listed ranges", formula_identities);
    criterion(4, "canonical forms: round trip, maj/fmaj, membership, constraint sizes", canonical_forms);
    criterion(5, "fmaj equidistribution between A^s_n and A^B_n (n<=10)", equidistribution);
    criterion(6, "spot values on A^B_2, A_3, A_2", spot_values);
    criterion(7, "exact division by (1-q) never leaves a remainder", exact_division_never_fails);
    criterion(8, "corrupted formula yields MISMATCH and nonzero verify exit", negative_control);
    const auto s =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (8 - failures) << "/8 criteria passed in " << s << " ms\n";
    return failures == 0 ? 0 : 1;
}
