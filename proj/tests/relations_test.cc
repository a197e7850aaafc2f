#include <doctest.h>

#include <map>

#include "framelex/errors.h"
#include "framelex/lexicon.h"
#include "framelex/relations.h"
#include "framelex/render.h"
#include "support.h"

using namespace framelex;

TEST_CASE("relations of a frame") {
  auto store = testing::open_fixture();
  auto rels = frame_relations(*store, FrameKey(std::string("Revenge")));
  REQUIRE(rels.size() == 1);
  CHECK(repr(*rels[0]) == "<Parent=Rewards_and_punishments -- Inheritance -> Child=Revenge>");
  CHECK(rels[0]->super_frame().name == "Rewards_and_punishments");
  CHECK(&rels[0]->sub_frame() == &store->frame("Revenge"));
  CHECK(frame(*store, 347).relations().size() == 1);
}

TEST_CASE("relation filters") {
  auto store = testing::open_fixture();
  auto all = frame_relations(*store);
  auto raw = oracle::elements(oracle::slurp(testing::kFixture / "frRelation.xml"), "frameRelation");
  CHECK(all.size() == raw.size());
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1]->id < all[i]->id);

  auto inheritance = frame_relations(*store, std::nullopt, std::nullopt, std::string("Inheritance"));
  for (const FrameRelation* r : inheritance) CHECK(r->type->name == "Inheritance");

  auto pair = frame_relations(*store, FrameKey(std::string("Rewards_and_punishments")),
                              FrameKey(std::string("Revenge")));
  auto reversed = frame_relations(*store, FrameKey(std::string("Revenge")),
                                  FrameKey(std::string("Rewards_and_punishments")));
  CHECK(pair.size() == 1);
  CHECK(pair == reversed);
  CHECK_THROWS_AS(frame_relations(*store, std::nullopt, std::nullopt, std::string("Nope")),
                  LookupFailure);
}

TEST_CASE("FE relations follow their frame relations") {
  auto store = testing::open_fixture();
  auto fe_rels = fe_relations(*store, FrameKey(std::string("Revenge")));
  REQUIRE_FALSE(fe_rels.empty());
  for (const FERelation* r : fe_rels) {
    CHECK(r->relation->sub_frame().name == "Revenge");
    CHECK(r->sub_fe().frame == &r->relation->sub_frame());
    CHECK(r->super_fe().frame == &r->relation->super_frame());
  }
  CHECK(fe_relations(*store).size() ==
        oracle::elements(oracle::slurp(testing::kFixture / "frRelation.xml"), "FERelation").size());
}

TEST_CASE("relation types") {
  auto store = testing::open_fixture();
  auto types = frame_relation_types(*store);
  auto raw = oracle::elements(oracle::slurp(testing::kFixture / "frRelation.xml"),
                              "frameRelationType");
  REQUIRE(types.size() == raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    CHECK(types[i]->name == raw[i].attrs.at("name"));
    CHECK(types[i]->super_frame_label == raw[i].attrs.at("superFrameName"));
  }
}

TEST_CASE("semantic type lookup by name, abbreviation and ID") {
  auto store = testing::open_fixture();
  const SemType& by_name = semtype(*store, SemTypeKey(std::string("Sentient")));
  CHECK(&semtype(*store, SemTypeKey(std::string("Sent"))) == &by_name);
  CHECK(&semtype(*store, SemTypeKey(by_name.id)) == &by_name);
  CHECK(&semtype(*store, SemTypeKey(std::to_string(by_name.id))) == &by_name);
  CHECK_THROWS_AS(semtype(*store, SemTypeKey(std::string("X"))), LookupFailure);
  CHECK_THROWS_AS(semtype(*store, SemTypeKey(99999)), LookupFailure);
}

TEST_CASE("inheritance is a partial order matching the raw hierarchy") {
  auto store = testing::open_fixture();
  auto parents = oracle::semtype_parents(testing::kFixture);
  auto all = semtypes(*store);
  REQUIRE(all.size() == parents.size());
  REQUIRE(all.size() <= 20);
  for (const SemType* a : all) {
    CHECK(semtype_inherits(*a, *a));
    for (const SemType* b : all) {
      bool ab = semtype_inherits(*a, *b);
      CHECK(ab == oracle::inherits(parents, a->name, b->name));
      if (a != b && ab) CHECK_FALSE(semtype_inherits(*b, *a));
      for (const SemType* c : all) {
        if (ab && semtype_inherits(*b, *c)) CHECK(semtype_inherits(*a, *c));
      }
    }
  }
  CHECK(semtype_inherits(*store, SemTypeKey(std::string("Human")),
                         SemTypeKey(std::string("Physical_entity"))));
  CHECK_FALSE(semtype_inherits(*store, SemTypeKey(std::string("Physical_entity")),
                               SemTypeKey(std::string("Human"))));
}

TEST_CASE("propagation matches a raw fixpoint, is monotone and idempotent") {
  auto store = testing::open_fixture();
  std::map<std::string, const SemType*> before;
  for (const Frame* f : frames(*store)) {
    for (const FrameElement& fe : f->fes) before[f->name + "." + fe.name] = fe.semtype();
  }
  CHECK(store->frame("Revenge").fes.find("Avenger")->semtype() == nullptr);

  auto expected = oracle::propagated(testing::kFixture);
  std::size_t added = propagate_semtypes(*store);
  CHECK(added == expected.size());

  for (const Frame* f : frames(*store)) {
    for (const FrameElement& fe : f->fes) {
      std::string key = f->name + "." + fe.name;
      INFO(key);
      if (before[key] != nullptr) {
        CHECK(fe.semtype() == before[key]);
      } else if (expected.count(key)) {
        REQUIRE(fe.semtype() != nullptr);
        CHECK(fe.semtype()->name == expected[key]);
      } else {
        CHECK(fe.semtype() == nullptr);
      }
    }
  }
  const SemType* avenger = store->frame("Revenge").fes.find("Avenger")->semtype();
  REQUIRE(avenger != nullptr);
  CHECK(avenger->name == "Sentient");
  CHECK(propagate_semtypes(*store) == 0);
}
