#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace itw::cli {

inline constexpr const char* kToolVersion = "itw 0.1.0";

/// Exit codes.
enum Exit : int { ok = 0, absent_or_refused = 1, budget_exhausted = 2, input_error = 3, internal_error = 4 };

/// Runs one command line; `args` excludes the program name. Certificates and
/// results go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Certificate checker behind `check`: kind as in the certificate's "kind"
/// field, graph_path may be empty for self-contained kinds. Returns an exit code
/// and writes a one-line verdict to `out`.
int check_certificate(const std::string& kind, const std::string& graph_path, const nlohmann::json& cert,
                      std::ostream& out, std::ostream& err);

}  // namespace itw::cli
