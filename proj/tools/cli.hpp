#pragma once

#include "arcperm/verify.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace arcperm::cli {

enum ExitCode { ok = 0, mismatch = 1, usage = 2 };

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const FormulaRegistry& registry = FormulaRegistry::standard());

} // namespace arcperm::cli
