#include "commands.h"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "framelex/cli.h"
#include "framelex/corpus.h"
#include "framelex/errors.h"
#include "framelex/lexicon.h"
#include "framelex/relations.h"

namespace framelex::cli {

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> kTable = {
      {"frame", "frame <nameOrId>", {"frame"}},
      {"frames", "frames [pattern]", {"frames"}},
      {"frame-ids", "frame-ids [pattern]", {"frame_ids_and_names"}},
      {"frames-by-lemma", "frames-by-lemma <pattern>", {"frames_by_lemma"}},
      {"lu", "lu <id>", {"lu"}},
      {"lus", "lus [pattern] [--frame F]", {"lus"}},
      {"fes", "fes [pattern] [--frame F]", {"fes"}},
      {"relations", "relations [--frame F] [--frame2 G] [--type T]", {"frame_relations"}},
      {"fe-relations", "fe-relations [--frame F] [--frame2 G] [--type T]", {"fe_relations"}},
      {"relation-types", "relation-types", {"frame_relation_types"}},
      {"semtypes", "semtypes", {"semtypes"}},
      {"semtype", "semtype <key>", {"semtype"}},
      {"semtype-inherits", "semtype-inherits <sub> <super>", {"semtype_inherits"}},
      {"propagate-semtypes", "propagate-semtypes", {"propagate_semtypes"}},
      {"annotations", "annotations [pattern] [--no-exemplars] [--no-fulltext]", {"annotations"}},
      {"exemplars", "exemplars [pattern]", {"exemplars"}},
      {"ft-sents", "ft-sents [docPattern]", {"ft_sents"}},
      {"sents", "sents [--limit N]", {"sents"}},
      {"doc", "doc <id>", {"doc"}},
      {"docs", "docs [pattern]", {"docs"}},
      {"stats", "stats", {}},
      {"help", "help", {"help"}},
      {"browse", "browse", {}},
      {"fe", "fe <name>", {}, true},
      {"exemplar", "exemplar <k>", {}, true},
      {"annoset", "annoset <k>", {}, true},
      {"sent", "sent <k>", {}, true},
      {"up", "up", {}, true},
      {"quit", "quit", {}, true},
  };
  return kTable;
}

std::string stats(Store& store) {
  auto frames = store.all_frames();
  std::size_t lus = 0, fes = 0;
  for (const Frame* f : frames) {
    lus += f->lexical_units.size();
    fes += f->fes.size();
  }
  std::size_t exemplar_sentences = 0, exemplar_sets = 0;
  for (const Frame* f : frames) {
    for (const LexicalUnit& lu : f->lexical_units) {
      for (const Sentence* s : lu.exemplars()) {
        ++exemplar_sentences;
        exemplar_sets += s->frame_sets().size();
      }
    }
  }
  std::size_t ft_sentences = 0, ft_sets = 0;
  auto documents = docs(store);
  for (const Document* d : documents) {
    for (const Sentence* s : d->sentences()) {
      ++ft_sentences;
      ft_sets += s->frame_sets().size();
    }
  }
  std::ostringstream out;
  out << "frames: " << frames.size() << "\n"
      << "lexical units: " << lus << "\n"
      << "frame elements: " << fes << "\n"
      << "frame relations: " << store.all_relations().size() << "\n"
      << "frame relation types: " << store.relation_types().size() << "\n"
      << "semantic types: " << store.semtypes().size() << "\n"
      << "documents: " << documents.size() << "\n"
      << "exemplar sentences: " << exemplar_sentences << "\n"
      << "full-text sentences: " << ft_sentences << "\n"
      << "frame annotation sets: " << exemplar_sets + ft_sets << "\n";
  return out.str();
}

int exit_code_for_current_exception(std::ostream& err) {
  try {
    throw;
  } catch (const LookupFailure& e) {
    err << "lookup failed: " << e.what() << "\n";
    return kLookupFailure;
  } catch (const PatternError& e) {
    err << "bad pattern: " << e.what() << "\n";
    return kUsageError;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (...) {
    err << "error: unknown failure\n";
    return kDataError;
  }
}

namespace {

struct Args {
  std::string data;
  int width = 65;
  bool ids = false;
  std::string key;
  std::string key2;
  std::string pattern;
  std::string frame;
  std::string frame2;
  std::string type;
  bool no_exemplars = false;
  bool no_fulltext = false;
  int limit = -1;
};

class Printer {
 public:
  Printer(std::ostream& out, bool ids) : out_(out), ids_(ids) {}

  template <typename T>
  void list(const std::vector<const T*>& items, std::string (*name_of)(const T&)) {
    if (ids_) {
      std::vector<std::pair<int, std::string>> rows;
      for (const T* item : items) rows.emplace_back(item->id, name_of(*item));
      std::stable_sort(rows.begin(), rows.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [id, name] : rows) out_ << id << "\t" << name << "\n";
      return;
    }
    for (const T* item : items) out_ << repr(*item) << "\n";
  }

  template <typename T>
  void one(const T& item, const std::string& display, std::string (*name_of)(const T&)) {
    if (ids_) {
      out_ << item.id << "\t" << name_of(item) << "\n";
    } else {
      out_ << display;
      if (!display.empty() && display.back() != '\n') out_ << "\n";
    }
  }

 private:
  std::ostream& out_;
  bool ids_;
};

template <typename T>
std::string name_field(const T& item) {
  return item.name;
}
template <typename T>
std::string repr_field(const T& item) {
  return repr(item);
}
std::string sentence_text(const Sentence& s) { return s.text; }
std::string set_lu_name(const AnnotationSet& s) { return s.lu_name; }

bool given(const CLI::App* cmd, const char* name) {
  const CLI::Option* option = cmd->get_option_no_throw(name);
  return option != nullptr && option->count() > 0;
}

std::optional<std::string> opt(const CLI::App* cmd, const char* name, const std::string& value) {
  if (!given(cmd, name)) return std::nullopt;
  return value;
}

std::optional<FrameKey> frame_opt(const CLI::App* cmd, const char* name,
                                  const std::string& value) {
  if (!given(cmd, name)) return std::nullopt;
  return FrameKey(value);
}

}  // namespace

Outcome dispatch(const std::vector<std::string>& argv, const std::function<Store&()>& open_store,
                 std::ostream& out, std::ostream& err, const DisplayOptions& defaults,
                 bool in_repl, std::string* data_dir) {
  Args a;
  a.width = defaults.wrap_width;

  CLI::App app{"Browse a FrameNet-format lexicon.", "framelex"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--data", a.data, "data directory (default: $FRAMELEX_DATA)");
  app.add_option("--width", a.width, "wrap width for displays")->check(CLI::Range(20, 100000));
  app.add_flag("--ids", a.ids, "print ID<TAB>name lines sorted by ID");

  auto pattern_arg = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("pattern", a.pattern, what);
  };
  auto frame_filters = [&](CLI::App* cmd) {
    cmd->add_option("--frame", a.frame, "first frame (ID, name or pattern)");
    cmd->add_option("--frame2", a.frame2, "second frame");
    cmd->add_option("--type", a.type, "relation type name");
  };

  app.add_subcommand("frame", "show one frame")
      ->add_option("key", a.key, "frame name or ID")
      ->required();
  pattern_arg(app.add_subcommand("frames", "list frames whose name matches"), "name pattern");
  pattern_arg(app.add_subcommand("frame-ids", "map frame IDs to names (index only)"),
              "name pattern");
  app.add_subcommand("frames-by-lemma", "frames with an LU matching the pattern")
      ->add_option("pattern", a.pattern, "LU name pattern")
      ->required();
  app.add_subcommand("lu", "show one lexical unit")
      ->add_option("key", a.key, "LU ID")
      ->required()
      ->check(CLI::Number);
  {
    auto* cmd = app.add_subcommand("lus", "list lexical units");
    pattern_arg(cmd, "LU name pattern");
    cmd->add_option("--frame", a.frame, "frame ID, name or pattern");
  }
  {
    auto* cmd = app.add_subcommand("fes", "list frame elements");
    pattern_arg(cmd, "FE name pattern");
    cmd->add_option("--frame", a.frame, "frame ID, name or pattern");
  }
  frame_filters(app.add_subcommand("relations", "list frame-to-frame relations"));
  frame_filters(app.add_subcommand("fe-relations", "list FE-to-FE relations"));
  app.add_subcommand("relation-types", "list frame relation types");
  app.add_subcommand("semtypes", "list semantic types");
  app.add_subcommand("semtype", "show one semantic type")
      ->add_option("key", a.key, "name, abbreviation or ID")
      ->required();
  {
    auto* cmd = app.add_subcommand("semtype-inherits", "is <sub> a subtype of <super>?");
    cmd->add_option("sub", a.key, "subtype key")->required();
    cmd->add_option("super", a.key2, "supertype key")->required();
  }
  app.add_subcommand("propagate-semtypes", "copy FE semantic types along FE relations");
  {
    auto* cmd = app.add_subcommand("annotations", "list frame annotation sets");
    pattern_arg(cmd, "LU name pattern");
    cmd->add_flag("--no-exemplars", a.no_exemplars, "skip exemplar sentences");
    cmd->add_flag("--no-fulltext", a.no_fulltext, "skip full-text sentences");
  }
  pattern_arg(app.add_subcommand("exemplars", "list exemplar sentences"), "LU name pattern");
  pattern_arg(app.add_subcommand("ft-sents", "list full-text sentences"), "document pattern");
  app.add_subcommand("sents", "walk all sentences")
      ->add_option("--limit", a.limit, "stop after this many")
      ->check(CLI::NonNegativeNumber);
  app.add_subcommand("doc", "show one full-text document")
      ->add_option("key", a.key, "document ID")
      ->required()
      ->check(CLI::Number);
  pattern_arg(app.add_subcommand("docs", "list full-text documents"), "document name pattern");
  app.add_subcommand("stats", "count everything (loads the whole database)");
  app.add_subcommand("help", "summary of the library operations");
  app.add_subcommand("browse", "interactive browser");

  std::vector<const char*> cargv;
  for (const auto& s : argv) cargv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    Outcome failed;
    failed.code = rc == 0 ? kOk : kUsageError;
    return failed;
  }

  if (data_dir != nullptr && !a.data.empty()) *data_dir = a.data;
  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  DisplayOptions options{a.width};
  Printer print(out, a.ids);
  Outcome outcome;
  outcome.options = options;

  try {
    if (name == "help") {
      out << help_summary();
      return outcome;
    }
    if (name == "browse") {
      if (in_repl) {
        err << "already browsing\n";
        outcome.code = kUsageError;
      } else {
        outcome.browse = true;
      }
      return outcome;
    }

    Store& store = open_store();
    auto pattern = opt(cmd, "pattern", a.pattern);

    if (name == "frame") {
      const Frame& f = frame(store, FrameKey(a.key));
      print.one(f, render_frame(f, options), name_field<Frame>);
      outcome.focus = &f;
    } else if (name == "frames") {
      print.list(frames(store, pattern), name_field<Frame>);
    } else if (name == "frame-ids") {
      for (const auto& [id, fname] : frame_ids_and_names(store, pattern)) {
        out << id << "\t" << fname << "\n";
      }
    } else if (name == "frames-by-lemma") {
      print.list(frames_by_lemma(store, a.pattern), name_field<Frame>);
    } else if (name == "lu") {
      const LexicalUnit& u = lu(store, std::stoi(a.key));
      print.one(u, render_lu(u, options), name_field<LexicalUnit>);
      outcome.focus = &u;
    } else if (name == "lus") {
      print.list(lus(store, pattern, frame_opt(cmd, "--frame", a.frame)),
                 name_field<LexicalUnit>);
    } else if (name == "fes") {
      print.list(fes(store, pattern, frame_opt(cmd, "--frame", a.frame)),
                 name_field<FrameElement>);
    } else if (name == "relations") {
      print.list(frame_relations(store, frame_opt(cmd, "--frame", a.frame),
                                 frame_opt(cmd, "--frame2", a.frame2), opt(cmd, "--type", a.type)),
                 repr_field<FrameRelation>);
    } else if (name == "fe-relations") {
      print.list(fe_relations(store, frame_opt(cmd, "--frame", a.frame),
                              frame_opt(cmd, "--frame2", a.frame2), opt(cmd, "--type", a.type)),
                 repr_field<FERelation>);
    } else if (name == "relation-types") {
      print.list(frame_relation_types(store), name_field<FrameRelationType>);
    } else if (name == "semtypes") {
      print.list(semtypes(store), name_field<SemType>);
    } else if (name == "semtype") {
      const SemType& st = semtype(store, SemTypeKey(a.key));
      print.one(st, render_semtype(st, options), name_field<SemType>);
    } else if (name == "semtype-inherits") {
      out << (semtype_inherits(store, SemTypeKey(a.key), SemTypeKey(a.key2)) ? "true" : "false")
          << "\n";
    } else if (name == "propagate-semtypes") {
      out << propagate_semtypes(store) << " semantic type labels added\n";
    } else if (name == "annotations") {
      print.list(annotations(store, pattern, !a.no_exemplars, !a.no_fulltext), set_lu_name);
    } else if (name == "exemplars") {
      print.list(exemplars(store, pattern), sentence_text);
    } else if (name == "ft-sents") {
      print.list(ft_sents(store, pattern), sentence_text);
    } else if (name == "sents") {
      std::vector<const Sentence*> all;
      auto cursor = sents(store);
      while (a.limit < 0 || static_cast<int>(all.size()) < a.limit) {
        const Sentence* s = cursor.next();
        if (s == nullptr) break;
        all.push_back(s);
      }
      print.list(all, sentence_text);
    } else if (name == "doc") {
      const Document& d = doc(store, std::stoi(a.key));
      print.one(d, render_document(d, options), name_field<Document>);
      outcome.focus = &d;
    } else if (name == "docs") {
      print.list(docs(store, pattern), name_field<Document>);
    } else if (name == "stats") {
      out << stats(store);
    }
  } catch (...) {
    outcome.code = exit_code_for_current_exception(err);
  }
  return outcome;
}

}  // namespace framelex::cli
