#include <cctype>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "commands.h"
#include "framelex/cli.h"
#include "framelex/lexicon.h"

namespace framelex::cli {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> words;
  std::string word;
  bool in_word = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '\'') {
      std::size_t close = line.find('\'', i + 1);
      if (close == std::string::npos) throw std::invalid_argument("unterminated single quote");
      word.append(line, i + 1, close - i - 1);
      i = close;
      in_word = true;
    } else if (c == '"') {
      std::size_t j = i + 1;
      for (; j < line.size() && line[j] != '"'; ++j) {
        if (line[j] == '\\' && j + 1 < line.size() &&
            (line[j + 1] == '"' || line[j + 1] == '\\')) {
          ++j;
        }
        word += line[j];
      }
      if (j >= line.size()) throw std::invalid_argument("unterminated double quote");
      i = j;
      in_word = true;
    } else if (c == '\\') {
      word += (i + 1 < line.size()) ? line[++i] : '\\';
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_word) words.push_back(std::move(word));
      word.clear();
      in_word = false;
    } else {
      word += c;
      in_word = true;
    }
  }
  if (in_word) words.push_back(std::move(word));
  return words;
}

namespace {

struct Context {
  Focus focus;
  std::string label;
};

const char kReplHelp[] =
    "Browser commands:\n"
    "  fe <name>        frame element of the current frame\n"
    "  lu <name>        lexical unit of the current frame\n"
    "  exemplar <k>     k-th exemplar of the current LU (from 0)\n"
    "  sent <k>         k-th sentence of the current document (from 0)\n"
    "  annoset <k>      k-th annotation set of the current sentence (0 is the\n"
    "                   sentence-level set)\n"
    "  up               leave the current entity\n"
    "  quit, exit       end the session\n"
    "Any framelex subcommand also works here, e.g. `frame Revenge`.\n";

std::string label_of(const Focus& focus) {
  struct {
    std::string operator()(const Frame* f) const { return f->name; }
    std::string operator()(const LexicalUnit* u) const { return u->name; }
    std::string operator()(const FrameElement* fe) const { return fe->name; }
    std::string operator()(const Sentence* s) const { return "sent" + std::to_string(s->id); }
    std::string operator()(const AnnotationSet* a) const {
      return "annoset" + std::to_string(a->id);
    }
    std::string operator()(const Document* d) const { return d->name; }
  } visitor;
  return std::visit(visitor, focus);
}

bool parse_index(const std::string& text, std::size_t& out) {
  if (text.empty() || text.size() > 9) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  out = std::stoul(text);
  return true;
}

bool known_command(const std::string& word) {
  if (!word.empty() && word[0] == '-') return true;
  for (const CommandInfo& info : command_table()) {
    if (info.name == word) return true;
  }
  return false;
}

template <typename T>
const T* top_as(const std::vector<Context>& stack) {
  if (stack.empty()) return nullptr;
  const T* const* p = std::get_if<const T*>(&stack.back().focus);
  return p == nullptr ? nullptr : *p;
}

class Session {
 public:
  Session(Store& store, std::ostream& out, std::ostream& err, const DisplayOptions& options)
      : store_(store), out_(out), err_(err), options_(options) {}

  std::string prompt() const {
    if (stack_.empty()) return "framelex> ";
    std::string path;
    for (const Context& c : stack_) {
      if (!path.empty()) path += "/";
      path += c.label;
    }
    return path + "> ";
  }

  // Returns false when the session should end.
  bool execute(const std::string& line) {
    std::vector<std::string> words;
    try {
      words = tokenize(line);
    } catch (const std::invalid_argument& e) {
      err_ << e.what() << "\n";
      return true;
    }
    if (words.empty()) return true;
    const std::string& head = words[0];

    if (head == "quit" || head == "exit") return false;
    if (head == "up") {
      if (stack_.empty()) {
        err_ << "already at the top\n";
      } else {
        stack_.pop_back();
      }
      return true;
    }
    if (head == "help" && words.size() == 1) {
      out_ << help_summary() << "\n" << kReplHelp;
      return true;
    }
    if (drill(words)) return true;
    if (!known_command(head)) {
      err_ << "unknown command '" << head << "' (type help for a list)\n";
      return true;
    }

    std::vector<std::string> argv{"framelex"};
    argv.insert(argv.end(), words.begin(), words.end());
    Outcome outcome = dispatch(
        argv, [this]() -> Store& { return store_; }, out_, err_, options_, true, nullptr);
    if (outcome.focus) {
      stack_.clear();
      push(*outcome.focus);
    }
    return true;
  }

 private:
  void push(const Focus& focus) { stack_.push_back({focus, label_of(focus)}); }
  void push(const Focus& focus, std::string label) { stack_.push_back({focus, std::move(label)}); }

  void show(const std::string& text) {
    out_ << text;
    if (!text.empty() && text.back() != '\n') out_ << "\n";
  }

  // Handles the context-relative commands. Returns false to let the line fall
  // through to the ordinary subcommands.
  bool drill(const std::vector<std::string>& words) {
    const std::string& head = words[0];
    std::size_t k = 0;

    if (head == "fe") {
      const Frame* f = top_as<Frame>(stack_);
      if (f == nullptr || words.size() != 2) {
        err_ << "usage: fe <name>   (after displaying a frame)\n";
        return true;
      }
      const FrameElement* fe = f->fes.find(words[1]);
      if (fe == nullptr) {
        err_ << "frame " << f->name << " has no frame element " << words[1] << "\n";
        return true;
      }
      show(render_fe(*fe, options_));
      push(fe);
      return true;
    }

    if (head == "lu") {
      const Frame* f = top_as<Frame>(stack_);
      if (f == nullptr || words.size() != 2) return false;
      const LexicalUnit* u = f->lexical_units.find(words[1]);
      if (u == nullptr && parse_index(words[1], k)) {
        for (const LexicalUnit& candidate : f->lexical_units) {
          if (candidate.id == static_cast<int>(k)) u = &candidate;
        }
        if (u == nullptr) return false;
      }
      if (u == nullptr) {
        err_ << "frame " << f->name << " has no lexical unit " << words[1] << "\n";
        return true;
      }
      show(render_lu(*u, options_));
      push(u);
      return true;
    }

    if (head == "exemplar") {
      const LexicalUnit* u = top_as<LexicalUnit>(stack_);
      if (u == nullptr || words.size() != 2 || !parse_index(words[1], k)) {
        err_ << "usage: exemplar <k>   (after selecting a lexical unit)\n";
        return true;
      }
      auto sentences = u->exemplars();
      if (k >= sentences.size()) {
        err_ << u->name << " has " << sentences.size() << " exemplars\n";
        return true;
      }
      show(render_sentence(*sentences[k], options_));
      push(sentences[k], "exemplar" + std::to_string(k));
      return true;
    }

    if (head == "sent") {
      const Document* d = top_as<Document>(stack_);
      if (d == nullptr || words.size() != 2 || !parse_index(words[1], k)) {
        err_ << "usage: sent <k>   (after displaying a document)\n";
        return true;
      }
      auto sentences = d->sentences();
      if (k >= sentences.size()) {
        err_ << d->name << " has " << sentences.size() << " sentences\n";
        return true;
      }
      show(render_sentence(*sentences[k], options_));
      push(sentences[k], "sent" + std::to_string(k));
      return true;
    }

    if (head == "annoset") {
      const Sentence* s = top_as<Sentence>(stack_);
      if (s == nullptr || words.size() != 2 || !parse_index(words[1], k)) {
        err_ << "usage: annoset <k>   (after selecting a sentence)\n";
        return true;
      }
      if (k >= s->annotation_sets.size()) {
        err_ << "sentence " << s->id << " has " << s->annotation_sets.size()
             << " annotation sets\n";
        return true;
      }
      const AnnotationSet& set = s->annotation_sets[k];
      show(render_annotation_set(set, options_));
      push(&set, "annoset" + std::to_string(k));
      return true;
    }
    return false;
  }

  Store& store_;
  std::ostream& out_;
  std::ostream& err_;
  DisplayOptions options_;
  std::vector<Context> stack_;
};

}  // namespace

int repl(Store& store, std::istream& in, std::ostream& out, std::ostream& err,
         const DisplayOptions& options) {
  Session session(store, out, err, options);
  std::string line;
  while (true) {
    out << session.prompt() << std::flush;
    if (!std::getline(in, line)) {
      out << "\n";
      return kOk;
    }
    try {
      if (!session.execute(line)) return kOk;
    } catch (...) {
      exit_code_for_current_exception(err);
    }
  }
}

}  // namespace framelex::cli
