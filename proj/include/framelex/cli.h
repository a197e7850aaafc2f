#ifndef FRAMELEX_CLI_H_
#define FRAMELEX_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "framelex/render.h"
#include "framelex/store.h"

namespace framelex::cli {

enum ExitCode : int {
  kOk = 0,
  kLookupFailure = 1,
  kUsageError = 2,
  kDataError = 3,
};

// Entry point of the framelex executable. `in` feeds the browse REPL.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in);

// Interactive browser over an open store. Returns when the input ends or on
// `quit`. Never throws: every failure is reported on `err`.
int repl(Store& store, std::istream& in, std::ostream& out, std::ostream& err,
         const DisplayOptions& options = {});

// Splits a command line the way a POSIX shell would for words and quotes.
// Throws std::invalid_argument on an unterminated quote.
std::vector<std::string> tokenize(const std::string& line);

struct CommandInfo {
  std::string name;
  std::string usage;
  std::vector<std::string> operations;  // library operations the command exposes
  bool repl_only = false;
};
const std::vector<CommandInfo>& command_table();

std::string stats(Store& store);

}  // namespace framelex::cli

#endif  // FRAMELEX_CLI_H_
