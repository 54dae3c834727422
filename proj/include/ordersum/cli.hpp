#pragma once

#include <ostream>

#include "ordersum/corpus.hpp"
#include "ordersum/verifier.hpp"

namespace ordersum {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitCounterexample = 4;
inline constexpr int kExitViolations = 5;

/// One scan row: spec, order, psi_G, psi_Cn, ratio, ratio_approx,
/// comparison, solvable.
ReportJson scan_row(CorpusEntry const &entry);

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace ordersum
