#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "polyberg/purestates.hpp"

namespace polyberg {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // a check failed, or separation gap too small
  kExitBadInput = 2,      // bad symbol, state, or flags
  kExitNotSeparable = 3,  // states coincide for the available constructions
};

/// One complex number: "1.5", "-2i", "0.6+0.8i", "i" ('j' is accepted for 'i').
std::complex<double> parse_complex(const std::string& text);

/// "<xi>:<v0>,<v1>,..." (optionally bracketed; entries as in parse_complex, or
/// JSON [re, im] pairs) or "inf". Vectors within 1e-6 of unit norm are renormalized.
PureState parse_state(const std::string& text, int n);

/// Runs the tool with argv-style arguments; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyberg
