#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardy/json_io.hpp"

namespace hardy::cli {

enum ExitCode : int { ok = 0, negative = 2, numerical = 3, input = 4 };

/// A fully resolved command: {"command", "options", "inputs"}. Every output
/// document embeds its request so that `verify` can replay it.
struct Outcome {
  io::Json document;
  int code = ok;
};

/// Runs a request and maps library errors to exit codes. Throws InputError
/// (or std::invalid_argument) for malformed requests.
Outcome execute(const io::Json& request);

/// Entry point shared by the executable and the tests; args exclude argv[0].
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
