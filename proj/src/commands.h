#ifndef FRAMELEX_SRC_COMMANDS_H_
#define FRAMELEX_SRC_COMMANDS_H_

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framelex/model.h"
#include "framelex/render.h"
#include "framelex/store.h"

namespace framelex::cli {

// Something a command displayed that the REPL can drill into.
using Focus = std::variant<const Frame*, const LexicalUnit*, const FrameElement*,
                           const Sentence*, const AnnotationSet*, const Document*>;

struct Outcome {
  int code = 0;
  std::optional<Focus> focus;
  bool browse = false;  // the browse subcommand was selected
  DisplayOptions options;
};

// Parses argv (argv[0] is the program name) and runs the selected
// subcommand. `open_store` is called only when the subcommand needs data.
// Errors are reported on `err` and mapped to exit codes.
Outcome dispatch(const std::vector<std::string>& argv, const std::function<Store&()>& open_store,
                 std::ostream& out, std::ostream& err, const DisplayOptions& defaults,
                 bool in_repl, std::string* data_dir);

int exit_code_for_current_exception(std::ostream& err);

}  // namespace framelex::cli

#endif  // FRAMELEX_SRC_COMMANDS_H_
