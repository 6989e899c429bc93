#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hq/json_io.hpp"

namespace hq {

struct CommandResult {
  Json machine;
  std::string human;       // for standard output
  std::string diagnostic;  // for standard error
  // 0 success, 1 mathematical failure (verification false, no relation within
  // caps, precondition of a theorem not met), 2 usage or parse error.
  int exit_code = 0;
  std::string json_path;  // "-" for standard output
  bool quiet = false;
};

// Parses the arguments (without the program name) and runs one command.
// Pure: nothing is printed or written.
CommandResult dispatch(const std::vector<std::string>& args);

// dispatch plus the side effects: writes the JSON document and prints the
// human and diagnostic text. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hq
