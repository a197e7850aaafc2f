#include <doctest.h>

#include <set>

#include "framelex/errors.h"
#include "framelex/lexicon.h"
#include "framelex/pattern.h"
#include "support.h"

using namespace framelex;

namespace {

template <typename T>
std::set<int> ids_of(const std::vector<const T*>& items) {
  std::set<int> ids;
  for (const T* item : items) ids.insert(item->id);
  return ids;
}

template <typename T>
bool sorted_by_id(const std::vector<const T*>& items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i - 1]->id > items[i]->id) return false;
  }
  return true;
}

bool sorted_by_frame_then_id(const std::vector<const FrameElement*>& items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    auto key = [](const FrameElement* fe) { return std::pair(fe->frame->id, fe->id); };
    if (key(items[i - 1]) > key(items[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pattern semantics") {
  CHECK(Pattern("(?i)creat").matches("Cooking_creation"));
  CHECK(Pattern("creat").matches("Cooking_creation"));
  CHECK_FALSE(Pattern("Creat").matches("Cooking_creation"));
  CHECK(Pattern("^Rev").matches("Revenge"));
  CHECK_FALSE(Pattern("^venge").matches("Revenge"));
  CHECK(Pattern(R"(.+en\.v)").matches("awaken.v"));
  CHECK_FALSE(Pattern(R"(.+en\.v)").matches("awakenXv"));
  CHECK_THROWS_AS(Pattern("("), PatternError);
  CHECK_THROWS_AS(Pattern("[a-"), PatternError);
}

TEST_CASE("frames by pattern") {
  auto store = testing::open_fixture();
  auto found = frames(*store, std::string("(?i)creat"));
  REQUIRE(found.size() == 2);
  CHECK(found[0]->id == 268);
  CHECK(found[0]->name == "Cooking_creation");
  CHECK(found[1]->id == 1658);
  CHECK(frames(*store).size() == store->frame_index().size());
  CHECK_THROWS_AS(frames(*store, std::string("(")), PatternError);
}

TEST_CASE("frame lookup by name and ID") {
  auto store = testing::open_fixture();
  CHECK(frame(*store, 347).name == "Revenge");
  CHECK(frame(*store, std::string("Revenge")).id == 347);
  CHECK(frame(*store, std::string("347")).name == "Revenge");
  CHECK_THROWS_AS(frame(*store, std::string("NoSuchFrame")), LookupFailure);
  CHECK_THROWS_AS(frame(*store, 424242), LookupFailure);
  try {
    frame(*store, std::string("NoSuchFrame"));
  } catch (const LookupFailure& e) {
    CHECK(std::string(e.what()).find("NoSuchFrame") != std::string::npos);
  }
}

TEST_CASE("index-only frame map reads no frame file") {
  auto store = testing::open_fixture();
  auto map = frame_ids_and_names(*store, std::string("(?i)creat"));
  CHECK(map == std::map<int, std::string>{{268, "Cooking_creation"}, {1658, "Create_physical_artwork"}});
  CHECK(frame_ids_and_names(*store).size() == store->frame_index().size());
  CHECK(store->file_access_log() == std::vector<std::string>{"frameIndex.xml"});
}

TEST_CASE("LU lookup") {
  auto store = testing::open_fixture();
  auto found = ids_of(lus(*store, std::string(R"(.+en\.v)")));
  CHECK(found.count(5331));
  CHECK(found.count(7544));
  const LexicalUnit& lu6067 = lu(*store, 6067);
  CHECK(lu6067.name == "revenge.n");
  CHECK(lu6067.frame->name == "Revenge");
  CHECK_THROWS_AS(lu(*store, 1), LookupFailure);
}

TEST_CASE("frame restriction accepts an ID, a name or a pattern") {
  auto store = testing::open_fixture();
  auto by_id = ids_of(lus(*store, std::nullopt, FrameKey(347)));
  auto by_name = ids_of(lus(*store, std::nullopt, FrameKey(std::string("Revenge"))));
  auto by_pattern = ids_of(lus(*store, std::nullopt, FrameKey(std::string("^Reven"))));
  CHECK(by_id == by_name);
  CHECK(by_id == by_pattern);
  CHECK(by_id.size() == 18);
  auto fe_ids = ids_of(fes(*store, std::string("^A"), FrameKey(std::string("Revenge"))));
  CHECK(fe_ids == std::set<int>{3009});
  CHECK(fes(*store, std::nullopt, FrameKey(std::string("NoFrameLikeThis"))).empty());
}

TEST_CASE("plural lookups agree with a raw scan for random patterns") {
  auto store = testing::open_fixture();
  auto raw_frames = oracle::frames(testing::kFixture);
  auto raw_lus = oracle::lus(testing::kFixture);
  std::vector<oracle::Entry> raw_fes;
  for (const auto& fe : oracle::fes(testing::kFixture)) raw_fes.push_back({fe.id, fe.name, fe.frame_id});

  std::mt19937 rng(1234);
  for (int i = 0; i < 40; ++i) {
    std::string p = testing::random_pattern(rng);
    INFO("pattern " << p);
    auto f = frames(*store, p);
    auto l = lus(*store, p);
    auto e = fes(*store, p);
    CHECK(ids_of(f) == oracle::filter_ids(raw_frames, p));
    CHECK(ids_of(l) == oracle::filter_ids(raw_lus, p));
    CHECK(ids_of(e) == oracle::filter_ids(raw_fes, p));
    CHECK(sorted_by_id(f));
    CHECK(sorted_by_id(l));
    CHECK(sorted_by_frame_then_id(e));
  }
}

TEST_CASE("frames by lemma") {
  auto store = testing::open_fixture();
  auto found = frames_by_lemma(*store, "^revenge");
  REQUIRE(found.size() == 1);
  CHECK(found[0]->name == "Revenge");
  std::set<int> expected;
  for (const auto& lu : oracle::lus(testing::kFixture)) {
    if (oracle::matches("(?i)en", lu.name)) expected.insert(lu.frame_id);
  }
  CHECK(ids_of(frames_by_lemma(*store, "(?i)en")) == expected);
}

TEST_CASE("operation catalogue") {
  std::set<std::string> names;
  for (const auto& op : operations()) {
    CHECK_FALSE(op.signature.empty());
    CHECK(names.insert(op.name).second);
  }
  for (const char* expected : {"frames", "frame", "lus", "lu", "fes", "frame_relations",
                               "semtype_inherits", "propagate_semtypes", "annotations", "docs"}) {
    CHECK(names.count(expected));
  }
  std::string help = help_summary();
  for (const auto& op : operations()) CHECK(help.find(op.name) != std::string::npos);
}
