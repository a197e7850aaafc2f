#include "framelex/store.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "framelex/errors.h"
#include "framelex/loader.h"

namespace framelex {

namespace fs = std::filesystem;

std::unique_ptr<Store> Store::open(const std::optional<fs::path>& root) {
  fs::path dir;
  if (root && !root->empty()) {
    dir = *root;
  } else if (const char* env = std::getenv("FRAMELEX_DATA"); env != nullptr && *env != '\0') {
    dir = env;
  } else {
    throw OpenError("no data directory given and FRAMELEX_DATA is not set");
  }
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw OpenError("data directory does not exist: " + dir.string());
  }
  if (!fs::is_regular_file(dir / "frameIndex.xml", ec)) {
    throw OpenError("missing frameIndex.xml in " + dir.string());
  }
  std::unique_ptr<Store> store(new Store(dir));
  store->frame_index_ = parse_frame_index(store->read("frameIndex.xml"));
  for (std::size_t i = 0; i < store->frame_index_.size(); ++i) {
    const FrameIndexEntry& e = store->frame_index_[i];
    store->frame_pos_by_id_[e.id] = i;
    store->frame_id_by_name_[e.name] = e.id;
  }
  return store;
}

Store::Store(fs::path root) : root_(std::move(root)) {}
Store::~Store() = default;

std::string Store::read(const std::string& relative) {
  std::lock_guard lock(mu_);
  std::ifstream in(root_ / relative, std::ios::binary);
  if (!in) throw OpenError("cannot open " + (root_ / relative).string());
  std::ostringstream buf;
  buf << in.rdbuf();
  log_.push_back(relative);
  return std::move(buf).str();
}

std::vector<std::string> Store::file_access_log() const {
  std::lock_guard lock(mu_);
  return log_;
}

std::optional<int> Store::frame_id(std::string_view name) const {
  auto it = frame_id_by_name_.find(std::string(name));
  if (it == frame_id_by_name_.end()) return std::nullopt;
  return it->second;
}

const Frame& Store::frame(int id) {
  std::lock_guard lock(mu_);
  if (auto it = frames_.find(id); it != frames_.end()) return *it->second;
  auto pos = frame_pos_by_id_.find(id);
  if (pos == frame_pos_by_id_.end()) {
    throw LookupFailure("no frame with ID " + std::to_string(id));
  }
  const FrameIndexEntry& entry = frame_index_[pos->second];
  std::string rel = "frame/" + entry.name + ".xml";
  std::error_code ec;
  if (!fs::is_regular_file(root_ / rel, ec)) {
    throw IntegrityError("frame " + entry.name + " is indexed but " + rel + " is missing");
  }
  auto parsed = parse_frame_file(read(rel), rel);
  if (parsed->id != entry.id || parsed->name != entry.name) {
    throw IntegrityError(rel + " describes frame " + std::to_string(parsed->id) + " " +
                         parsed->name + " but the index says " + std::to_string(entry.id) + " " +
                         entry.name);
  }
  parsed->store_ = this;
  return *frames_.emplace(id, std::move(parsed)).first->second;
}

const Frame& Store::frame(std::string_view name) {
  auto id = frame_id(name);
  if (!id) throw LookupFailure("no frame named " + std::string(name));
  return frame(*id);
}

std::vector<const Frame*> Store::all_frames() {
  std::vector<int> ids;
  for (const auto& e : frame_index_) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  std::vector<const Frame*> out;
  for (int id : ids) out.push_back(&frame(id));
  return out;
}

const std::vector<LuIndexEntry>& Store::lu_index() {
  std::lock_guard lock(mu_);
  if (!lu_index_) {
    auto entries = parse_lu_index(read("luIndex.xml"));
    for (std::size_t i = 0; i < entries.size(); ++i) lu_pos_by_id_[entries[i].id] = i;
    lu_index_ = std::move(entries);
  }
  return *lu_index_;
}

const LuIndexEntry* Store::lu_entry(int id) {
  std::lock_guard lock(mu_);
  const auto& index = lu_index();
  auto it = lu_pos_by_id_.find(id);
  return it == lu_pos_by_id_.end() ? nullptr : &index[it->second];
}

const LexicalUnit& Store::lu(int id) {
  std::lock_guard lock(mu_);
  const LuIndexEntry* entry = lu_entry(id);
  if (entry == nullptr) throw LookupFailure("no lexical unit with ID " + std::to_string(id));
  const Frame* owner;
  try {
    owner = &frame(entry->frame_id);
  } catch (const LookupFailure&) {
    throw IntegrityError("LU " + std::to_string(id) + " belongs to unknown frame " +
                         std::to_string(entry->frame_id));
  }
  for (const LexicalUnit& u : owner->lexical_units) {
    if (u.id == id) return u;
  }
  throw IntegrityError("LU " + std::to_string(id) + " is indexed under frame " + owner->name +
                       " but missing from its file");
}

const std::vector<DocumentIndexEntry>& Store::document_index() {
  std::lock_guard lock(mu_);
  if (!doc_index_) {
    auto entries = parse_fulltext_index(read("fulltextIndex.xml"));
    for (std::size_t i = 0; i < entries.size(); ++i) doc_pos_by_id_[entries[i].id] = i;
    doc_index_ = std::move(entries);
  }
  return *doc_index_;
}

const Document& Store::document(int id) {
  std::lock_guard lock(mu_);
  if (auto it = documents_.find(id); it != documents_.end()) return *it->second;
  const auto& index = document_index();
  auto pos = doc_pos_by_id_.find(id);
  if (pos == doc_pos_by_id_.end()) {
    throw LookupFailure("no document with ID " + std::to_string(id));
  }
  const DocumentIndexEntry& e = index[pos->second];
  auto doc = std::make_unique<Document>();
  doc->id = e.id;
  doc->name = e.name;
  doc->corpus_name = e.corpus_name;
  doc->corpus_id = e.corpus_id;
  doc->description = e.description;
  doc->store_ = this;
  return *documents_.emplace(id, std::move(doc)).first->second;
}

std::span<const Sentence* const> Store::sentences_of(const Document& doc) {
  std::lock_guard lock(mu_);
  if (doc.loaded_) return doc.sentences_;
  auto it = documents_.find(doc.id);
  if (it == documents_.end() || it->second.get() != &doc) return doc.sentences_;
  Document& target = *it->second;

  std::string rel = "fulltext/" + target.corpus_name + "__" + target.name + ".xml";
  std::error_code ec;
  if (!fs::is_regular_file(root_ / rel, ec)) rel = "fulltext/" + target.name + ".xml";
  if (!fs::is_regular_file(root_ / rel, ec)) {
    throw IntegrityError("document " + target.name + " is indexed but has no file under fulltext/");
  }
  auto parsed = parse_fulltext_file(read(rel), rel);
  if (parsed->id != target.id) {
    throw IntegrityError(rel + " describes document " + std::to_string(parsed->id) +
                         ", expected " + std::to_string(target.id));
  }
  std::vector<std::unique_ptr<Sentence>> sentences = std::move(parsed->owned_);
  lu_index();
  for (auto& s : sentences) {
    for (AnnotationSet& set : s->annotation_sets) {
      if (&set == &s->annotation_sets.front()) continue;
      set.lu_defined = set.lu_id.has_value() && lu_pos_by_id_.count(*set.lu_id) > 0;
    }
  }
  target.adopt(std::move(sentences));
  return target.sentences_;
}

const Store::Exemplars& Store::exemplars_for(const LexicalUnit& lu) {
  std::lock_guard lock(mu_);
  if (auto it = exemplars_.find(lu.id); it != exemplars_.end()) return it->second;
  Exemplars ex;
  std::string rel = "lu/lu" + std::to_string(lu.id) + ".xml";
  std::error_code ec;
  if (fs::is_regular_file(root_ / rel, ec)) {
    LuFile file = parse_lu_file(read(rel), rel);
    if (file.lu_id != lu.id) {
      throw IntegrityError(rel + " describes LU " + std::to_string(file.lu_id));
    }
    for (auto& group : file.subcorpora) {
      SubCorpus sc{group.name, {}};
      for (auto& s : group.sentences) {
        s->lu = &lu;
        sc.sentences.push_back(s.get());
        ex.sentences.push_back(s.get());
        ex.owned.push_back(std::move(s));
      }
      ex.subcorpora.push_back(std::move(sc));
    }
  }
  return exemplars_.emplace(lu.id, std::move(ex)).first->second;
}

std::span<const Sentence* const> Store::exemplars_of(const LexicalUnit& lu) {
  return exemplars_for(lu).sentences;
}

std::span<const SubCorpus> Store::subcorpora_of(const LexicalUnit& lu) {
  return exemplars_for(lu).subcorpora;
}

void Store::ensure_relations() {
  std::lock_guard lock(mu_);
  if (relations_loaded_) return;
  relation_types_ = parse_relations_file(read("frRelation.xml"));
  std::unordered_set<int> ids;
  for (auto& type : relation_types_) {
    relation_type_ptrs_.push_back(type.get());
    for (auto& rel : type->relations) {
      if (!ids.insert(rel->id).second) {
        throw IntegrityError("frRelation.xml: duplicate frame relation ID " +
                             std::to_string(rel->id));
      }
      rel->store_ = this;
      relation_ptrs_.push_back(rel.get());
    }
  }
  std::sort(relation_ptrs_.begin(), relation_ptrs_.end(),
            [](const FrameRelation* a, const FrameRelation* b) { return a->id < b->id; });
  for (const FrameRelation* rel : relation_ptrs_) {
    relations_by_frame_[rel->super_frame_name].push_back(rel);
    if (rel->sub_frame_name != rel->super_frame_name) {
      relations_by_frame_[rel->sub_frame_name].push_back(rel);
    }
  }
  relations_loaded_ = true;
}

std::span<const FrameRelationType* const> Store::relation_types() {
  ensure_relations();
  return relation_type_ptrs_;
}

std::span<const FrameRelation* const> Store::all_relations() {
  ensure_relations();
  return relation_ptrs_;
}

std::span<const FrameRelation* const> Store::relations_of(const Frame& frame) {
  std::lock_guard lock(mu_);
  ensure_relations();
  auto it = relations_by_frame_.find(frame.name);
  if (it == relations_by_frame_.end()) return {};
  return it->second;
}

const Frame& Store::related_frame(const FrameRelation& rel, bool super_side) {
  const std::string& name = super_side ? rel.super_frame_name : rel.sub_frame_name;
  auto id = frame_id(name);
  if (!id) {
    throw IntegrityError("frame relation " + std::to_string(rel.id) + " names unknown frame " +
                         name);
  }
  return frame(*id);
}

void Store::ensure_semtypes() {
  std::lock_guard lock(mu_);
  if (semtypes_loaded_) return;
  semtypes_ = parse_semtypes_file(read("semTypes.xml"));
  for (auto& st : semtypes_) {
    semtype_ptrs_.push_back(st.get());
    semtype_by_id_[st->id] = st.get();
    semtype_by_name_.emplace(st->name, st.get());
    if (!st->abbrev.empty()) semtype_by_abbrev_.emplace(st->abbrev, st.get());
  }
  semtypes_loaded_ = true;
}

std::span<const SemType* const> Store::semtypes() {
  ensure_semtypes();
  return semtype_ptrs_;
}

const SemType* Store::semtype_by_id(int id) {
  std::lock_guard lock(mu_);
  ensure_semtypes();
  auto it = semtype_by_id_.find(id);
  return it == semtype_by_id_.end() ? nullptr : it->second;
}

const SemType* Store::semtype_by_name(std::string_view name) {
  std::lock_guard lock(mu_);
  ensure_semtypes();
  auto it = semtype_by_name_.find(std::string(name));
  return it == semtype_by_name_.end() ? nullptr : it->second;
}

const SemType* Store::semtype_by_abbrev(std::string_view abbrev) {
  std::lock_guard lock(mu_);
  ensure_semtypes();
  auto it = semtype_by_abbrev_.find(abbrev);
  return it == semtype_by_abbrev_.end() ? nullptr : it->second;
}

const SemType* Store::resolve_semtype(const SemTypeRef& ref, const std::string& context) {
  const SemType* st = semtype_by_id(ref.id);
  if (st == nullptr && !ref.name.empty()) st = semtype_by_name(ref.name);
  if (st == nullptr) {
    throw IntegrityError(context + " refers to unknown semantic type " + std::to_string(ref.id) +
                         " " + ref.name);
  }
  return st;
}

std::vector<const SemType*> Store::semtypes_of(const Frame& frame) {
  std::lock_guard lock(mu_);
  std::vector<const SemType*> out;
  for (const SemTypeRef& ref : frame.semtype_refs) {
    out.push_back(resolve_semtype(ref, "frame " + frame.name));
  }
  return out;
}

const SemType* Store::semtype_of(const FrameElement& fe) {
  std::lock_guard lock(mu_);
  if (!fe.semtype_resolved_) {
    if (fe.semtype_ref) {
      fe.semtype_ = resolve_semtype(*fe.semtype_ref, "FE " + fe.frame->name + "." + fe.name);
    }
    fe.semtype_resolved_ = true;
  }
  return fe.semtype_;
}

}  // namespace framelex
