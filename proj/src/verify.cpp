#include "arcperm/verify.hpp"

#include "arcperm/arc_sets.hpp"
#include "arcperm/enumerator.hpp"
#include "arcperm/formulas.hpp"
#include "arcperm/polynomial_json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace arcperm {

std::string_view to_string(VerificationStatus s)
{
    switch (s) {
    case VerificationStatus::equal:
        return "EQUAL";
    case VerificationStatus::mismatch:
        return "MISMATCH";
    case VerificationStatus::out_of_stated_range:
        return "OUT_OF_STATED_RANGE";
    }
    return "?";
}

std::vector<VerificationRow> verify(const FormulaEntry& entry, int n_min, int n_max)
{
    std::vector<VerificationRow> rows;
    for (int n = std::max(n_min, entry.stated_min); n <= n_max; ++n) {
        if (entry.applies && !entry.applies(n))
            continue;
        VerificationRow row;
        row.formula = entry.id;
        row.n = n;
        row.lhs = entry.brute_force(n);
        if (n < entry.valid_min) {
            row.status = VerificationStatus::out_of_stated_range;
            try {
                row.rhs = entry.closed_form(n);
                row.note = row.rhs == row.lhs ? "literal form agrees below its range"
                                              : "literal form disagrees with enumeration";
            } catch (const std::domain_error&) {
                row.rhs = row.lhs;
                row.note = "formula range starts at " + std::to_string(entry.valid_min);
            }
        } else {
            try {
                row.rhs = entry.closed_form(n);
                row.status = row.rhs == row.lhs ? VerificationStatus::equal : VerificationStatus::mismatch;
            } catch (const InexactDivision& e) {
                row.status = VerificationStatus::mismatch;
                row.rhs = e.remainder();
                row.note = "closed form not divisible; rhs holds the remainder";
            }
        }
        row.diff = row.lhs - row.rhs;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool all_passed(const std::vector<VerificationRow>& rows)
{
    return std::none_of(rows.begin(), rows.end(),
                        [](const VerificationRow& r) { return r.status == VerificationStatus::mismatch; });
}

void FormulaRegistry::add(FormulaEntry entry) { entries_.push_back(std::move(entry)); }

std::vector<const FormulaEntry*> FormulaRegistry::select(std::string_view selector) const
{
    std::vector<const FormulaEntry*> out;
    for (const auto& e : entries_) {
        const std::string_view id = e.id;
        const bool family = id.size() > selector.size() && id.substr(0, selector.size()) == selector &&
                            id[selector.size()] == ':';
        if (selector == "all" || id == selector || family)
            out.push_back(&e);
    }
    return out;
}

namespace {

// Descent-set monomials follow the x_0 := 1 convention, so a descent at
// position 0 (negative first entry) is not recorded.
Polynomial brute(SetKind kind, int n, WeightSpec spec)
{
    Polynomial p = enumerator(generate_family(kind, n, true), spec);
    if (spec.descent_set)
        p = substitute(p, {{Variable::x(0), 1}});
    return p;
}

using T = WeightSpec::TStat;
using Q = WeightSpec::QStat;

FormulaRegistry build_standard()
{
    namespace f = formulas;
    FormulaRegistry r;

    auto des_set = [] {
        WeightSpec s;
        s.descent_set = true;
        return s;
    };

    r.add({"f_A_inv_des", 2, 2, f::arc_inv_descent_set, [=](int n) {
               auto s = des_set();
               s.t = T::inv;
               return brute(SetKind::arc, n, s);
           }});
    r.add({"f_A_des_set", 2, 2, f::arc_descent_set, [=](int n) { return brute(SetKind::arc, n, des_set()); }});
    r.add({"f_A_des_maj", 2, 3, f::arc_des_maj,
           [](int n) { return brute(SetKind::arc, n, {.t = T::des, .q = Q::maj}); }});
    r.add({"f_A_des", 2, 3, f::arc_des, [](int n) { return brute(SetKind::arc, n, {.t = T::des}); }});
    r.add({"f_A_maj", 2, 2, f::arc_maj, [](int n) { return brute(SetKind::arc, n, {.q = Q::maj}); }});
    r.add({"f_A_signed_maj", 2, 2, f::arc_signed_maj,
           [](int n) { return brute(SetKind::arc, n, {.q = Q::maj, .character = Character::sign}); }});

    auto signed_des = [=](int n) {
        auto s = des_set();
        s.character = Character::sign;
        return brute(SetKind::arc, n, s);
    };
    r.add({"f_sign_des_variants", 2, 2, f::arc_signed_descent_set, signed_des});
    r.add({"f_sign_des_variants:even", 2, 2, f::arc_signed_descent_set_even, signed_des,
           [](int n) { return n % 2 == 0; }});

    r.add({"f_L_des_set", 1, 1, f::left_unimodal_descent_set,
           [=](int n) { return brute(SetKind::left_unimodal, n, des_set()); }});

    auto des_neg = [=] {
        auto s = des_set();
        s.negative_set = true;
        return s;
    };
    r.add({"f_As_des_neg", 1, 1, f::signed_arc_des_neg,
           [=](int n) { return brute(SetKind::signed_arc, n, des_neg()); }});
    r.add({"f_As_des_neg_inv", 1, 1, f::signed_arc_des_neg_inv, [=](int n) {
               auto s = des_neg();
               s.t = T::inv;
               return brute(SetKind::signed_arc, n, s);
           }});
    r.add({"f_As_fdes_fmaj", 2, 3, f::signed_arc_fdes_fmaj,
           [](int n) { return brute(SetKind::signed_arc, n, {.t = T::fdes, .q = Q::fmaj}); }});
    r.add({"f_As_fdes", 2, 3, f::signed_arc_fdes,
           [](int n) { return brute(SetKind::signed_arc, n, {.t = T::fdes}); }});
    for (Character chi : all_characters)
        r.add({"f_As_character_fmaj:" + std::string(to_string(chi)), 1, 1,
               [chi](int n) { return f::signed_arc_character_fmaj(n, chi); },
               [chi](int n) { return brute(SetKind::signed_arc, n, {.q = Q::fmaj, .character = chi}); }});

    for (Character chi : all_characters)
        r.add({"f_AB_character_fmaj:" + std::string(to_string(chi)), 1, 1,
               [chi](int n) { return f::b_arc_character_fmaj(n, chi); },
               [chi](int n) { return brute(SetKind::b_arc, n, {.q = Q::fmaj, .character = chi}); }});
    r.add({"f_AB_fdes_fmaj", 2, 2, f::b_arc_fdes_fmaj,
           [](int n) { return brute(SetKind::b_arc, n, {.t = T::fdes, .q = Q::fmaj}); }});
    r.add({"f_AB_fdes", 2, 3, f::b_arc_fdes, [](int n) { return brute(SetKind::b_arc, n, {.t = T::fdes}); }});
    r.add({"f_AB_des_set", 2, 2, f::b_arc_descent_set,
           [=](int n) { return brute(SetKind::b_arc, n, des_set()); }});
    return r;
}

} // namespace

const FormulaRegistry& FormulaRegistry::standard()
{
    static const FormulaRegistry registry = build_standard();
    return registry;
}

nlohmann::json to_json(const VerificationRow& row)
{
    nlohmann::json j = {{"formula", row.formula},
                        {"n", row.n},
                        {"status", std::string(to_string(row.status))},
                        {"lhs", to_json(row.lhs)},
                        {"rhs", to_json(row.rhs)},
                        {"diff", to_json(row.diff)}};
    if (!row.note.empty())
        j["note"] = row.note;
    return j;
}

std::string format_table(const std::vector<VerificationRow>& rows)
{
    std::size_t width = 7;
    for (const auto& r : rows)
        width = std::max(width, r.formula.size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "formula" << "  " << std::setw(3) << "n"
        << "  status\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(width)) << r.formula << "  " << std::setw(3) << r.n << "  "
            << to_string(r.status);
        if (!r.note.empty())
            out << "  (" << r.note << ")";
        out << '\n';
        if (!r.diff.is_zero())
            out << "    diff: " << to_string(r.diff) << '\n';
    }
    return out.str();
}

} // namespace arcperm
