#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nfsos/decomposition.hpp"

namespace nfsos {

struct RunConfig {
  std::string field_poly;
  std::string element;
  bool json = false;
  bool length_only = false;
  PrimeSearchStrategy strategy;
};

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,        // parse errors, reducible or non-monic polynomials, zero
  kExitNotSum = 2,       // NotASumOfSquares
  kExitScope = 3,        // NonMaximalOrderAtP, DiscriminantTooLarge
  kExitSearch = 4,       // PrimeSearchExhausted, SearchBoundExceeded
  kExitMismatch = 5,     // verify: summands do not reproduce the element
  kExitInternal = 6,
};

int exit_code_for(ErrorKind kind);

/// Parses, computes and prints one report; errors go to `err` (or `out` as
/// JSON when config.json is set). Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Re-sums the squares of `summands` in the given field; exit 0 on a match,
/// kExitMismatch otherwise.
int verify(const std::string& field_poly, const std::string& element, const std::vector<std::string>& summands,
           std::ostream& out, std::ostream& err);

/// As verify, reading field/element/summands from a JSON report.
int verify_json(const std::string& report, std::ostream& out, std::ostream& err);

}  // namespace nfsos
