// Runs each acceptance criterion and prints one result line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "framelex/cli.h"
#include "framelex/corpus.h"
#include "framelex/errors.h"
#include "framelex/lexicon.h"
#include "framelex/relations.h"
#include "framelex/text_wrap.h"
#include "framelex/render.h"
#include "support.h"

using namespace framelex;

namespace {

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

template <typename T>
std::set<int> ids_of(const std::vector<const T*>& items) {
  std::set<int> ids;
  for (const T* item : items) ids.insert(item->id);
  return ids;
}

std::vector<std::string> log_since(const Store& store, std::size_t from) {
  auto log = store.file_access_log();
  return {log.begin() + static_cast<long>(from), log.end()};
}

int cli_code(std::vector<std::string> args) {
  args.insert(args.begin(), {"framelex", "--data", testing::kFixture.string()});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in;
  return cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
}

template <typename F>
bool throws_lookup(F&& f) {
  try {
    f();
  } catch (const LookupFailure&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

enum class Outcome { kPass, kFail, kSkip };

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 means no time limit
  std::function<Outcome(std::string&)> body;
};

Outcome golden_frame(std::string&) {
  auto store = testing::open_fixture();
  const Frame& f = frame(*store, std::string("Revenge"));
  std::string out = render_frame(f);
  expect(out == testing::golden("frame_revenge.txt"), "display differs from golden");
  expect(out.rfind("frame (347): Revenge\n", 0) == 0, "header");
  expect(f.lexical_units.size() == 18, "18 LUs");
  expect(f.fes.size() == 14, "14 FEs");
  expect(f.core_sets.size() == 2, "2 core sets");
  expect(f.relations().size() == 1, "1 relation");
  return Outcome::kPass;
}

Outcome golden_exemplar(std::string&) {
  auto store = testing::open_fixture();
  const Sentence* s = lu(*store, 6067).exemplars()[20];
  expect(s->id == 929548, "exemplar 20 is sentence 929548");
  std::string out = render_sentence(*s);
  expect(out == testing::golden("exemplar_929548.txt"), "display differs from golden");
  expect(out.find("^^^") != std::string::npos, "support markers");
  expect(out.find("[Injury:DNI]") != std::string::npos, "null instantiation");
  expect(out.find("(Avenge=Avenger, sup=supp, Ave=Avenger)") != std::string::npos, "footer");
  return Outcome::kPass;
}

Outcome golden_fulltext(std::string&) {
  auto store = testing::open_fixture();
  const Sentence* found = nullptr;
  for (const Sentence* s : ft_sents(*store)) {
    if (s->id == 4148528) found = s;
  }
  expect(found != nullptr, "sentence 4148528 present");
  std::string out = render_sentence(*found);
  expect(out == testing::golden("fulltext_4148528.txt"), "display differs from golden");
  expect(out.find("[3] ?") != std::string::npos, "[3] ? marker");
  return Outcome::kPass;
}

Outcome lookups(std::string&) {
  auto store = testing::open_fixture();
  expect(ids_of(frames(*store, std::string("(?i)creat"))) == std::set<int>{268, 1658},
         "frames('(?i)creat')");
  auto l = ids_of(lus(*store, std::string(R"(.+en\.v)")));
  expect(l.count(5331) && l.count(7544), "lus includes 5331 and 7544");

  auto fresh = testing::open_fixture();
  auto map = frame_ids_and_names(*fresh, std::string("(?i)creat"));
  expect(map == std::map<int, std::string>{{268, "Cooking_creation"}, {1658, "Create_physical_artwork"}},
         "frame_ids_and_names map");
  for (const auto& p : fresh->file_access_log()) {
    expect(p.rfind("frame/", 0) != 0, "index-only lookup read " + p);
  }
  return Outcome::kPass;
}

Outcome laziness(std::string&) {
  auto run = [] {
    auto store = testing::open_fixture();
    expect(store->file_access_log() == std::vector<std::string>{"frameIndex.xml"},
           "open reads only frameIndex.xml");
    render_frame(frame(*store, std::string("Revenge")));
    auto added = log_since(*store, 1);
    expect(added.size() <= 3, "more than 3 files read for the frame display");
    for (const auto& p : added) expect(p.rfind("lu/", 0) != 0, "read " + p);
    return store->file_access_log();
  };
  expect(run() == run(), "log replay differs");
  return Outcome::kPass;
}

Outcome oracle_equivalence(std::string& note) {
  auto store = testing::open_fixture();
  auto raw_frames = oracle::frames(testing::kFixture);
  auto raw_lus = oracle::lus(testing::kFixture);
  std::vector<oracle::Entry> raw_fes;
  for (const auto& fe : oracle::fes(testing::kFixture)) raw_fes.push_back({fe.id, fe.name, fe.frame_id});
  std::mt19937 rng(20240601);
  for (int i = 0; i < 100; ++i) {
    std::string p = testing::random_pattern(rng);
    expect(ids_of(frames(*store, p)) == oracle::filter_ids(raw_frames, p), "frames " + p);
    expect(ids_of(lus(*store, p)) == oracle::filter_ids(raw_lus, p), "lus " + p);
    expect(ids_of(fes(*store, p)) == oracle::filter_ids(raw_fes, p), "fes " + p);
  }
  note = "100 patterns";
  return Outcome::kPass;
}

Outcome propagation(std::string& note) {
  auto store = testing::open_fixture();
  std::map<const FrameElement*, const SemType*> before;
  for (const Frame* f : frames(*store)) {
    for (const FrameElement& fe : f->fes) before[&fe] = fe.semtype();
  }
  std::size_t added = propagate_semtypes(*store);
  expect(added == oracle::propagated(testing::kFixture).size(), "count differs from raw fixpoint");
  const SemType* avenger = store->frame("Revenge").fes.find("Avenger")->semtype();
  expect(avenger != nullptr && avenger->name == "Sentient", "Revenge.Avenger is Sentient");
  for (const auto& [fe, st] : before) {
    if (st != nullptr) expect(fe->semtype() == st, "existing label changed on " + fe->name);
  }
  expect(propagate_semtypes(*store) == 0, "second call returns 0");
  note = std::to_string(added) + " labels added";
  return Outcome::kPass;
}

Outcome semtype_order(std::string& note) {
  auto store = testing::open_fixture();
  auto all = semtypes(*store);
  expect(all.size() <= 20, "hierarchy too large for an exhaustive check");
  auto parents = oracle::semtype_parents(testing::kFixture);
  std::size_t chains = 0;
  for (const SemType* a : all) {
    expect(semtype_inherits(*a, *a), "reflexive " + a->name);
    for (const SemType* b : all) {
      bool ab = semtype_inherits(*a, *b);
      expect(ab == oracle::inherits(parents, a->name, b->name), a->name + " vs " + b->name);
      if (a != b && ab) expect(!semtype_inherits(*b, *a), "asymmetric " + a->name + "/" + b->name);
      for (const SemType* c : all) {
        if (ab && semtype_inherits(*b, *c)) {
          expect(semtype_inherits(*a, *c), "transitive " + a->name + "/" + c->name);
          ++chains;
        }
      }
    }
  }
  note = std::to_string(all.size()) + " types, " + std::to_string(chains) + " chains";
  return Outcome::kPass;
}

Outcome error_contract(std::string&) {
  auto store = testing::open_fixture();
  expect(throws_lookup([&] { frame(*store, std::string("NoSuchFrame")); }), "frame");
  expect(throws_lookup([&] { lu(*store, 1); }), "lu");
  expect(throws_lookup([&] { semtype(*store, SemTypeKey(std::string("X"))); }), "semtype");
  expect(throws_lookup([&] { doc(*store, 99999); }), "doc");
  expect(cli_code({"frame", "NoSuchFrame"}) == 1, "cli frame");
  expect(cli_code({"lu", "1"}) == 1, "cli lu");
  expect(cli_code({"semtype", "X"}) == 1, "cli semtype");
  expect(cli_code({"doc", "99999"}) == 1, "cli doc");
  return Outcome::kPass;
}

Outcome annotation_partition(std::string&) {
  auto store = testing::open_fixture();
  std::mt19937 rng(4242);
  for (int i = 0; i < 20; ++i) {
    std::string p = testing::random_pattern(rng);
    auto both = annotations(*store, p);
    auto ex = annotations(*store, p, true, false);
    auto ft = annotations(*store, p, false, true);
    std::vector<const AnnotationSet*> joined = ex;
    joined.insert(joined.end(), ft.begin(), ft.end());
    expect(both == joined, "union differs for " + p);
    std::set<const AnnotationSet*> unique(joined.begin(), joined.end());
    expect(unique.size() == joined.size(), "not disjoint for " + p);
  }
  for (const Sentence* s : exemplars(*store)) {
    expect(s->frame_sets().size() == 1, "sentence " + std::to_string(s->id));
  }
  return Outcome::kPass;
}

// Every marker run starts where its text span starts after layout.
Outcome alignment(std::string& note) {
  auto store = testing::open_fixture();
  std::size_t spans = 0;
  auto covers = [](const Visualization& v, const Span& span, char32_t marker) {
    int from = v.columns.at(span.start), to = v.columns.at(span.end);
    for (std::size_t r = 1; r < v.rows.size(); ++r) {
      const auto& row = v.rows[r];
      if (static_cast<int>(row.size()) <= to) continue;
      bool all = true;
      for (int c = from; c <= to && all; ++c) all = row[c] == marker;
      if (all) return true;
    }
    return false;
  };
  auto text_ok = [](const Visualization& v, const Sentence& s) {
    std::u32string text = text::decode_utf8(s.text);
    if (v.columns.size() != text.size() + 1) return false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (v.rows[0][v.columns[i]] != text[i]) return false;
    }
    return true;
  };
  auto check_set = [&](const AnnotationSet& set) {
    Visualization v = visualize_frame_set(set);
    expect(text_ok(v, *set.sentence), "text columns in set " + std::to_string(set.id));
    for (const Span& t : set.targets) {
      expect(covers(v, t, U'*'), "target in set " + std::to_string(set.id));
      ++spans;
    }
    for (const FESpan& fe : set.fe.overt) {
      expect(covers(v, fe.span, U'-'), fe.name + " in set " + std::to_string(set.id));
      ++spans;
    }
  };
  auto check_targets = [&](const Sentence& s) {
    Visualization v = visualize_sentence_targets(s);
    if (!v.inline_layout) return;
    expect(text_ok(v, s), "text columns in sentence " + std::to_string(s.id));
    for (const AnnotationSet& set : s.frame_sets()) {
      for (const Span& t : set.targets) {
        expect(covers(v, t, U'*'), "target of set " + std::to_string(set.id));
        ++spans;
      }
    }
  };
  for (const Sentence* s : exemplars(*store)) {
    check_set(*s->frame_set());
    check_targets(*s);
  }
  for (const Sentence* s : ft_sents(*store)) {
    check_targets(*s);
    for (const AnnotationSet& set : s->frame_sets()) check_set(set);
  }
  note = std::to_string(spans) + " spans";
  return Outcome::kPass;
}

Outcome real_data(std::string& note) {
  const char* dir = std::getenv("FRAMELEX_DATA");
  if (dir == nullptr || *dir == '\0') {
    note = "FRAMELEX_DATA is not set";
    return Outcome::kSkip;
  }
  auto start = std::chrono::steady_clock::now();
  auto store = Store::open(std::filesystem::path(dir));
  double open_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(open_seconds < 5.0, "open took " + std::to_string(open_seconds) + " s");
  std::string report = cli::stats(*store);
  auto number_after = [&](const std::string& key) {
    auto at = report.find(key);
    expect(at != std::string::npos, "stats lacks " + key);
    return std::stol(report.substr(at + key.size()));
  };
  long frame_count = number_after("frames: ");
  long lu_count = number_after("lexical units: ");
  expect(frame_count >= 1000, "frames " + std::to_string(frame_count));
  expect(lu_count >= 10000, "LUs " + std::to_string(lu_count));
  note = std::to_string(frame_count) + " frames, " + std::to_string(lu_count) + " LUs";
  return Outcome::kPass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "frame display golden", 1.0, golden_frame},
      {2, "lexicographic sentence golden", 0, golden_exemplar},
      {3, "full-text sentence golden", 0, golden_fulltext},
      {4, "lookup reproduction", 0, lookups},
      {5, "laziness", 0, laziness},
      {6, "oracle equivalence", 5.0, oracle_equivalence},
      {7, "semantic type propagation", 0, propagation},
      {8, "semantic type inheritance order", 0, semtype_order},
      {9, "error contract", 0, error_contract},
      {10, "annotation partition", 0, annotation_partition},
      {11, "marker alignment", 0, alignment},
      {12, "real data smoke", 0, real_data},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string note;
    Outcome outcome = Outcome::kFail;
    auto start = std::chrono::steady_clock::now();
    try {
      outcome = c.body(note);
    } catch (const Failure& f) {
      note = f.why;
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome == Outcome::kPass && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome = Outcome::kFail;
      note = "took longer than " + std::to_string(c.limit_seconds) + " s";
    }
    const char* label = outcome == Outcome::kPass ? "PASS" : outcome == Outcome::kSkip ? "SKIP" : "FAIL";
    if (outcome == Outcome::kFail) ++failures;
    std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", label, c.number, c.title.c_str(), seconds,
                note.empty() ? "" : " - ", note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
