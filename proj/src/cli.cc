#include "framelex/cli.h"

#include <memory>
#include <ostream>

#include "commands.h"

namespace framelex::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in) {
  std::vector<std::string> args(argv, argv + argc);
  if (args.empty()) args.emplace_back("framelex");

  std::string data_dir;
  std::unique_ptr<Store> store;
  auto open_store = [&]() -> Store& {
    if (!store) {
      std::optional<std::filesystem::path> root;
      if (!data_dir.empty()) root = data_dir;
      store = Store::open(root);
    }
    return *store;
  };

  Outcome outcome = dispatch(args, open_store, out, err, DisplayOptions{}, false, &data_dir);
  if (!outcome.browse) return outcome.code;
  try {
    return repl(open_store(), in, out, err, outcome.options);
  } catch (...) {
    return exit_code_for_current_exception(err);
  }
}

}  // namespace framelex::cli
