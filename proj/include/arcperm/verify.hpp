#pragma once

// Checks closed forms against brute-force enumeration and reports the
// outcome per n.

#include "arcperm/polynomial.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace arcperm {

enum class VerificationStatus { equal, mismatch, out_of_stated_range };

std::string_view to_string(VerificationStatus s);

/// One closed form paired with the enumeration it claims to equal.
struct FormulaEntry {
    std::string id;
    /// Smallest n for which the identity is claimed.
    int stated_min = 1;
    /// Smallest n where the literal closed form is expected to hold. Rows in
    /// [stated_min, valid_min) are reported as out_of_stated_range.
    int valid_min = 1;
    std::function<Polynomial(int)> closed_form;
    std::function<Polynomial(int)> brute_force;
    /// Restricts the identity to some n (e.g. even n only); empty means all.
    std::function<bool(int)> applies;
};

struct VerificationRow {
    std::string formula;
    int n = 0;
    VerificationStatus status = VerificationStatus::equal;
    Polynomial lhs;  ///< brute-force enumeration
    Polynomial rhs;  ///< closed form (or the enumeration when no closed form exists at n)
    Polynomial diff; ///< lhs - rhs
    std::string note;
};

/// Rows for every n in [max(n_min, stated_min), n_max] where the entry
/// applies. Never throws on a mismatch; an InexactDivision raised by the
/// closed form is reported as a mismatch with the remainder as the diff.
std::vector<VerificationRow> verify(const FormulaEntry& entry, int n_min, int n_max);

class FormulaRegistry {
  public:
    void add(FormulaEntry entry);
    const std::vector<FormulaEntry>& entries() const { return entries_; }

    /// Entries whose id equals `selector`, or whose id starts with
    /// "<selector>:", or all of them for "all". Empty when nothing matches.
    std::vector<const FormulaEntry*> select(std::string_view selector) const;

    /// Every identity the library implements.
    static const FormulaRegistry& standard();

  private:
    std::vector<FormulaEntry> entries_;
};

bool all_passed(const std::vector<VerificationRow>& rows);

nlohmann::json to_json(const VerificationRow& row);
/// Fixed-width table, one line per row; the diff is printed on mismatches.
std::string format_table(const std::vector<VerificationRow>& rows);

} // namespace arcperm
