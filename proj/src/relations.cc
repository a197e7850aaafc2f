#include "framelex/relations.h"

#include <algorithm>

#include "framelex/errors.h"

namespace framelex {

namespace {

std::string frame_name_for(Store& store, const FrameKey& key) {
  return frame(store, key).name;
}

bool touches(const FrameRelation& rel, const std::string& name) {
  return rel.super_frame_name == name || rel.sub_frame_name == name;
}

}  // namespace

std::vector<const FrameRelation*> frame_relations(Store& store,
                                                  const std::optional<FrameKey>& frame1,
                                                  const std::optional<FrameKey>& frame2,
                                                  const std::optional<std::string>& type) {
  const FrameRelationType* wanted = nullptr;
  if (type) {
    for (const FrameRelationType* t : store.relation_types()) {
      if (t->name == *type) wanted = t;
    }
    if (wanted == nullptr) throw LookupFailure("no frame relation type named " + *type);
  }
  std::optional<std::string> name1, name2;
  if (frame1) name1 = frame_name_for(store, *frame1);
  if (frame2) name2 = frame_name_for(store, *frame2);

  std::vector<const FrameRelation*> out;
  for (const FrameRelation* rel : store.all_relations()) {
    if (wanted && rel->type != wanted) continue;
    if (name1 && !touches(*rel, *name1)) continue;
    if (name2 && !touches(*rel, *name2)) continue;
    if (name1 && name2 && *name1 != *name2) {
      bool joined = (rel->super_frame_name == *name1 && rel->sub_frame_name == *name2) ||
                    (rel->super_frame_name == *name2 && rel->sub_frame_name == *name1);
      if (!joined) continue;
    }
    out.push_back(rel);
  }
  return out;
}

std::vector<const FERelation*> fe_relations(Store& store, const std::optional<FrameKey>& frame1,
                                            const std::optional<FrameKey>& frame2,
                                            const std::optional<std::string>& type) {
  std::vector<const FERelation*> out;
  for (const FrameRelation* rel : frame_relations(store, frame1, frame2, type)) {
    std::vector<const FERelation*> group;
    for (const auto& fer : rel->fe_relations) group.push_back(fer.get());
    std::sort(group.begin(), group.end(),
              [](const FERelation* a, const FERelation* b) { return a->id < b->id; });
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

std::vector<const FrameRelationType*> frame_relation_types(Store& store) {
  auto types = store.relation_types();
  return {types.begin(), types.end()};
}

std::vector<const SemType*> semtypes(Store& store) {
  auto all = store.semtypes();
  return {all.begin(), all.end()};
}

const SemType& semtype(Store& store, const SemTypeKey& key) {
  const SemType* found = nullptr;
  std::string shown;
  if (const int* id = std::get_if<int>(&key)) {
    found = store.semtype_by_id(*id);
    shown = std::to_string(*id);
  } else {
    const std::string& text = std::get<std::string>(key);
    shown = text;
    found = store.semtype_by_name(text);
    if (found == nullptr) found = store.semtype_by_abbrev(text);
    if (found == nullptr && !text.empty() && text.size() <= 9 &&
        std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      found = store.semtype_by_id(std::stoi(text));
    }
  }
  if (found == nullptr) throw LookupFailure("no semantic type " + shown);
  return *found;
}

bool semtype_inherits(const SemType& sub, const SemType& super) {
  for (const SemType* t = &sub; t != nullptr; t = t->super_type) {
    if (t == &super) return true;
  }
  return false;
}

bool semtype_inherits(Store& store, const SemTypeKey& sub, const SemTypeKey& super) {
  return semtype_inherits(semtype(store, sub), semtype(store, super));
}

std::size_t propagate_semtypes(Store& store) {
  std::lock_guard lock(store.mu_);
  store.all_frames();
  auto relations = store.all_relations();

  // Resolve every FE relation once; the loop below then runs on plain pointers.
  std::vector<std::pair<const FrameElement*, const FrameElement*>> edges;
  for (const FrameRelation* rel : relations) {
    std::vector<const FERelation*> group;
    for (const auto& fer : rel->fe_relations) group.push_back(fer.get());
    std::sort(group.begin(), group.end(),
              [](const FERelation* a, const FERelation* b) { return a->id < b->id; });
    for (const FERelation* fer : group) edges.emplace_back(&fer->super_fe(), &fer->sub_fe());
  }

  std::size_t added = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [super_fe, sub_fe] : edges) {
      const SemType* from = store.semtype_of(*super_fe);
      if (from == nullptr || store.semtype_of(*sub_fe) != nullptr) continue;
      sub_fe->semtype_ = from;
      ++added;
      changed = true;
    }
  }
  return added;
}

}  // namespace framelex
