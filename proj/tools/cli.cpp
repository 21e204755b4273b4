#include "cli.hpp"

#include "arcperm/arc_sets.hpp"
#include "arcperm/canonical.hpp"
#include "arcperm/patterns.hpp"
#include "arcperm/polynomial_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace arcperm::cli {

namespace {

using nlohmann::json;

/// Thrown for bad flag values found after CLI11 has accepted the syntax.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int arc_family_limit = 14;

int family_limit(SetKind kind)
{
    switch (kind) {
    case SetKind::symmetric:
        return default_symmetric_limit;
    case SetKind::hyperoctahedral:
        return default_hyperoctahedral_limit;
    default:
        return arc_family_limit;
    }
}

SetKind set_kind(const std::string& name)
{
    try {
        return parse_set_kind(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<SignedPermutation> family(SetKind kind, int n, bool force, std::ostream& err)
{
    if (n < 1)
        throw UsageError("--n must be at least 1");
    const int limit = family_limit(kind);
    if (n > limit) {
        if (!force)
            throw UsageError("n=" + std::to_string(n) + " exceeds the limit " + std::to_string(limit) + " for set " +
                             std::string(to_string(kind)) + "; pass --force to override");
        err << "warning: n=" << n << " exceeds the limit " << limit << " for set " << to_string(kind)
            << ", output may be very large\n";
    }
    return generate_family(kind, n, force);
}

enum class Format { lines, csv, json };

Format parse_format(const std::string& s, bool csv_allowed = true)
{
    if (s == "lines")
        return Format::lines;
    if (s == "csv" && csv_allowed)
        return Format::csv;
    if (s == "json")
        return Format::json;
    throw UsageError("unsupported --format '" + s + "'");
}

std::string join(const PositionSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------

void cmd_enumerate(SetKind kind, int n, bool force, Format fmt, std::ostream& out, std::ostream& err)
{
    const auto perms = family(kind, n, force, err);
    const bool is_signed = is_signed_family(kind);
    auto text = [&](const SignedPermutation& p) {
        return is_signed ? to_string(p) : to_string(absolute(p));
    };
    switch (fmt) {
    case Format::lines:
        for (const auto& p : perms)
            out << text(p) << '\n';
        out << "count " << perms.size() << '\n';
        break;
    case Format::csv: {
        out << "index,permutation\n";
        std::size_t i = 0;
        for (const auto& p : perms)
            out << ++i << ",\"" << text(p) << "\"\n";
        out << "# count " << perms.size() << '\n';
        break;
    }
    case Format::json: {
        json list = json::array();
        for (const auto& p : perms)
            list.push_back(p.word());
        out << json{{"set", std::string(to_string(kind))}, {"n", n}, {"count", perms.size()}, {"permutations", list}}
                   .dump()
            << '\n';
        break;
    }
    }
}

void cmd_stats(const std::string& text, const std::string& group, Format fmt, std::ostream& out)
{
    const SignedPermutation p = parse_signed_permutation(text);
    bool type_b = group == "B";
    if (group.empty())
        type_b = !negative_set(p).empty();
    else if (group != "A" && group != "B")
        throw UsageError("--group must be A or B");
    if (!type_b && !negative_set(p).empty())
        throw UsageError("negative entries are not allowed in group A");

    const StatProfile s = stats(p);
    json j = {{"permutation", to_string(p)}, {"group", type_b ? "B" : "A"}, {"des_set", s.des_set},
              {"des", s.des},         {"maj", s.maj},                {"inv", s.inv}};
    if (type_b) {
        j["neg_set"] = s.neg_set;
        j["neg"] = s.neg;
        j["fmaj"] = s.fmaj;
        j["fdes"] = s.fdes;
        j["sign"] = s.sign;
        j["sign_abs"] = s.sign_abs;
        j["neg_parity"] = s.neg_parity;
    } else {
        j["sign"] = s.sign;
    }
    if (fmt == Format::json) {
        out << j.dump() << '\n';
        return;
    }
    out << "permutation " << to_string(p) << '\n' << "group " << (type_b ? "B" : "A") << '\n';
    out << "des_set " << join(s.des_set) << '\n' << "des " << s.des << '\n' << "maj " << s.maj << '\n';
    out << "inv " << s.inv << (type_b ? "  (of |pi|)" : "") << '\n';
    if (type_b) {
        out << "neg_set " << join(s.neg_set) << '\n' << "neg " << s.neg << '\n';
        out << "fmaj " << s.fmaj << '\n' << "fdes " << s.fdes << '\n';
        out << "sign " << s.sign << '\n' << "sign_abs " << s.sign_abs << '\n' << "neg_parity " << s.neg_parity << '\n';
    } else {
        out << "sign " << s.sign << '\n';
    }
}

template <class P>
void print_witness(const AvoidanceResult<P>& r, std::ostream& out)
{
    if (!r.witness)
        return;
    out << "pattern " << to_string(r.witness->pattern) << " at positions ";
    for (std::size_t i = 0; i < r.witness->indices.size(); ++i)
        out << (i ? "," : "") << r.witness->indices[i];
    out << '\n';
}

void cmd_check(const std::string& text, SetKind kind, std::ostream& out)
{
    std::optional<DefinitionFailure> failure;
    std::ostringstream witness;
    if (is_signed_family(kind)) {
        const SignedPermutation p = parse_signed_permutation(text);
        if (kind == SetKind::signed_arc) {
            failure = signed_arc_failure(p);
            if (failure)
                print_witness(avoids_all(p, signed_arc_forbidden()), witness);
        } else if (kind == SetKind::b_arc) {
            failure = b_arc_failure(p);
            if (failure)
                print_witness(avoids_all(p, b_arc_forbidden()), witness);
        }
    } else {
        const Permutation p = parse_permutation(text);
        if (kind == SetKind::arc) {
            failure = arc_failure(p);
            if (failure)
                print_witness(avoids_all(p, arc_forbidden()), witness);
        } else if (kind == SetKind::left_unimodal) {
            failure = left_unimodal_failure(p);
        }
    }
    if (!failure) {
        out << "MEMBER of " << to_string(kind) << '\n';
        return;
    }
    out << "NON-MEMBER of " << to_string(kind) << '\n';
    out << "definition fails at position " << failure->position << ": " << failure->reason << '\n';
    out << witness.str();
}

void cmd_decompose(const std::string& text, const std::string& group, std::ostream& out)
{
    if (group == "A") {
        const Permutation p = parse_permutation(text);
        const ExponentVectorA e = decompose_A(p);
        const int m = maj_from_exponents(e);
        out << to_string(e) << '\n';
        out << "recomposed " << to_string(recompose(e)) << '\n';
        out << "sum k " << m << ", maj " << maj(p) << (m == maj(p) ? " (match)" : " (MISMATCH)") << '\n';
        out << "arc by exponents: " << std::boolalpha << is_arc_by_exponents(e) << '\n';
        out << "arc by definition: " << is_arc(p) << '\n';
    } else if (group == "B") {
        const SignedPermutation p = parse_signed_permutation(text);
        const ExponentVectorB e = decompose_B(p);
        const int f = fmaj_from_exponents(e);
        const int direct = stats(p).fmaj;
        out << to_string(e) << '\n';
        out << "recomposed " << to_string(recompose(e)) << '\n';
        out << "sum k " << f << ", fmaj " << direct << (f == direct ? " (match)" : " (MISMATCH)") << '\n';
        out << "b-arc by exponents: " << std::boolalpha << is_b_arc_by_exponents(e) << '\n';
        out << "b-arc by definition: " << is_b_arc(p) << '\n';
    } else {
        throw UsageError("--group must be A or B");
    }
}

int cmd_verify(const FormulaRegistry& registry, const std::string& selector, int n_min, int n_max, Format fmt,
               std::ostream& out)
{
    const auto entries = registry.select(selector);
    if (entries.empty())
        throw UsageError("unknown formula '" + selector + "'");
    if (n_max < n_min)
        throw UsageError("--n-max must not be below --n-min");
    if (n_max > 10)
        throw UsageError("--n-max is limited to 10");
    std::vector<VerificationRow> rows;
    for (const FormulaEntry* e : entries) {
        auto part = verify(*e, n_min, n_max);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    if (fmt == Format::json) {
        json list = json::array();
        for (const auto& r : rows)
            list.push_back(to_json(r));
        out << list.dump() << '\n';
    } else {
        out << format_table(rows);
    }
    return all_passed(rows) ? ok : mismatch;
}

int statistic_value(const std::string& stat, const StatProfile& s)
{
    if (stat == "des")
        return s.des;
    if (stat == "maj")
        return s.maj;
    if (stat == "inv")
        return s.inv;
    if (stat == "fmaj")
        return s.fmaj;
    if (stat == "fdes")
        return s.fdes;
    return s.neg;
}

void cmd_table(const std::string& stat, SetKind kind, int n, bool force, Format fmt, std::ostream& out,
               std::ostream& err)
{
    const bool type_b_stat = stat == "fmaj" || stat == "fdes" || stat == "neg";
    if (!type_b_stat && stat != "des" && stat != "maj" && stat != "inv")
        throw UsageError("unknown statistic '" + stat + "'");
    if (type_b_stat && !is_signed_family(kind))
        throw UsageError("statistic " + stat + " needs a signed set (signed-arc, b-arc, hyp)");

    std::string note;
    if (stat == "inv" && is_signed_family(kind))
        note = "inv computed on |pi|";

    std::map<int, long long> dist;
    for (const auto& p : family(kind, n, force, err))
        ++dist[statistic_value(stat, stats(p))];

    switch (fmt) {
    case Format::lines:
        if (!note.empty())
            out << "# " << note << '\n';
        for (auto [v, c] : dist)
            out << v << ": " << c << '\n';
        break;
    case Format::csv:
        if (!note.empty())
            out << "# " << note << '\n';
        out << "value,count\n";
        for (auto [v, c] : dist)
            out << v << ',' << c << '\n';
        break;
    case Format::json: {
        json rows = json::array();
        for (auto [v, c] : dist)
            rows.push_back({{"value", v}, {"count", c}});
        json j = {{"stat", stat}, {"set", std::string(to_string(kind))}, {"n", n}, {"distribution", rows}};
        if (!note.empty())
            j["note"] = note;
        out << j.dump() << '\n';
        break;
    }
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const FormulaRegistry& registry)
{
    CLI::App app{"Arc permutations: enumeration, statistics, membership and formula checks", "arcperm"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Write output to this file instead of stdout");

    std::string set_name, perm, group, format = "lines", formula, stat;
    int n = 0, n_min = 1, n_max = 8;
    bool force = false;

    auto* enumerate = app.add_subcommand("enumerate", "List every permutation of a set");
    enumerate->add_option("--set", set_name, "arc|left-unimodal|signed-arc|b-arc|sym|hyp")->required();
    enumerate->add_option("--n", n, "Size")->required();
    enumerate->add_option("--format", format, "lines|csv|json");
    enumerate->add_flag("--force", force, "Ignore the size guard");

    auto* stats_cmd = app.add_subcommand("stats", "Print the statistics of one permutation");
    stats_cmd->add_option("--perm", perm, "Permutation, e.g. \"[2,-1,3]\" or 231")->required();
    stats_cmd->add_option("--group", group, "A|B (default: B when a negative entry is present)");
    stats_cmd->add_option("--format", format, "lines|json");

    auto* check = app.add_subcommand("check", "Decide membership and explain failures");
    check->add_option("--perm", perm, "Permutation")->required();
    check->add_option("--set", set_name, "arc|left-unimodal|signed-arc|b-arc|sym|hyp")->required();

    auto* decompose = app.add_subcommand("decompose", "Canonical factorization into cyclic elements");
    decompose->add_option("--perm", perm, "Permutation")->required();
    decompose->add_option("--group", group, "A|B")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against enumeration");
    verify_cmd->add_option("--formula", formula, "Formula id, family prefix, or 'all'")->required();
    verify_cmd->add_option("--n-max", n_max, "Largest n (default 8)");
    verify_cmd->add_option("--n-min", n_min, "Smallest n (default 1)");
    verify_cmd->add_option("--format", format, "lines|json");

    auto* table = app.add_subcommand("table", "Distribution of a statistic over a set");
    table->add_option("--stat", stat, "des|maj|inv|fmaj|fdes|neg")->required();
    table->add_option("--set", set_name, "arc|left-unimodal|signed-arc|b-arc|sym|hyp")->required();
    table->add_option("--n", n, "Size")->required();
    table->add_option("--format", format, "lines|csv|json");
    table->add_flag("--force", force, "Ignore the size guard");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open " << out_path << " for writing\n";
            return usage;
        }
    }
    std::ostream& sink = out_path.empty() ? out : file;

    try {
        if (*enumerate)
            cmd_enumerate(set_kind(set_name), n, force, parse_format(format), sink, err);
        else if (*stats_cmd)
            cmd_stats(perm, group, parse_format(format, false), sink);
        else if (*check)
            cmd_check(perm, set_kind(set_name), sink);
        else if (*decompose)
            cmd_decompose(perm, group, sink);
        else if (*verify_cmd)
            return cmd_verify(registry, formula, n_min, n_max, parse_format(format, false), sink);
        else if (*table)
            cmd_table(stat, set_kind(set_name), n, force, parse_format(format), sink, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        // parse and validation failures from the library
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return ok;
}

} // namespace arcperm::cli
