// The database handle. Opening a store reads frameIndex.xml only; every
// other file is parsed on first use and cached until the store is destroyed.
// References handed out stay valid for the lifetime of the store.
//
// Concurrent readers are fine: all lazy population happens under one
// internal lock, so a file is parsed at most once. propagate_semtypes() is
// the exception and needs the store to itself.

#ifndef FRAMELEX_STORE_H_
#define FRAMELEX_STORE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "framelex/index.h"
#include "framelex/model.h"

namespace framelex {

class Store {
 public:
  // Falls back to $FRAMELEX_DATA when `root` is empty. Throws OpenError if no
  // directory is given, it does not exist, or frameIndex.xml is missing.
  static std::unique_ptr<Store> open(const std::optional<std::filesystem::path>& root = {});

  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;
  ~Store();

  const std::filesystem::path& root() const { return root_; }

  // Frame index, in file order. Loaded at open.
  const std::vector<FrameIndexEntry>& frame_index() const { return frame_index_; }
  std::optional<int> frame_id(std::string_view name) const;

  const Frame& frame(int id);
  const Frame& frame(std::string_view name);
  // Loads every frame file. Ordered by frame ID.
  std::vector<const Frame*> all_frames();

  const std::vector<LuIndexEntry>& lu_index();
  const LuIndexEntry* lu_entry(int id);
  const LexicalUnit& lu(int id);

  const std::vector<DocumentIndexEntry>& document_index();
  const Document& document(int id);

  std::span<const FrameRelationType* const> relation_types();
  std::span<const FrameRelation* const> all_relations();  // by relation ID
  std::span<const SemType* const> semtypes();
  const SemType* semtype_by_id(int id);
  const SemType* semtype_by_name(std::string_view name);
  const SemType* semtype_by_abbrev(std::string_view abbrev);

  // Relative paths of every file read so far, in order.
  std::vector<std::string> file_access_log() const;

  // Lazy attribute hooks used by the entity accessors.
  std::span<const FrameRelation* const> relations_of(const Frame& frame);
  std::vector<const SemType*> semtypes_of(const Frame& frame);
  const SemType* semtype_of(const FrameElement& fe);
  std::span<const Sentence* const> exemplars_of(const LexicalUnit& lu);
  std::span<const SubCorpus> subcorpora_of(const LexicalUnit& lu);
  std::span<const Sentence* const> sentences_of(const Document& doc);
  const Frame& related_frame(const FrameRelation& rel, bool super_side);

  // Requires exclusive access. See relations.h.
  friend std::size_t propagate_semtypes(Store& store);

 private:
  struct Exemplars {
    std::vector<std::unique_ptr<Sentence>> owned;
    std::vector<const Sentence*> sentences;
    std::vector<SubCorpus> subcorpora;
  };

  explicit Store(std::filesystem::path root);

  std::string read(const std::string& relative);
  void ensure_relations();
  void ensure_semtypes();
  const Exemplars& exemplars_for(const LexicalUnit& lu);
  const SemType* resolve_semtype(const SemTypeRef& ref, const std::string& context);

  std::filesystem::path root_;
  mutable std::recursive_mutex mu_;
  std::vector<std::string> log_;

  std::vector<FrameIndexEntry> frame_index_;
  std::unordered_map<int, std::size_t> frame_pos_by_id_;
  std::unordered_map<std::string, int> frame_id_by_name_;
  std::unordered_map<int, std::unique_ptr<Frame>> frames_;

  std::optional<std::vector<LuIndexEntry>> lu_index_;
  std::unordered_map<int, std::size_t> lu_pos_by_id_;
  std::unordered_map<int, Exemplars> exemplars_;

  std::optional<std::vector<DocumentIndexEntry>> doc_index_;
  std::unordered_map<int, std::size_t> doc_pos_by_id_;
  std::unordered_map<int, std::unique_ptr<Document>> documents_;

  bool relations_loaded_ = false;
  std::vector<std::unique_ptr<FrameRelationType>> relation_types_;
  std::vector<const FrameRelationType*> relation_type_ptrs_;
  std::vector<const FrameRelation*> relation_ptrs_;
  std::unordered_map<std::string, std::vector<const FrameRelation*>> relations_by_frame_;

  bool semtypes_loaded_ = false;
  std::vector<std::unique_ptr<SemType>> semtypes_;
  std::vector<const SemType*> semtype_ptrs_;
  std::unordered_map<int, const SemType*> semtype_by_id_;
  std::unordered_map<std::string, const SemType*> semtype_by_name_;
  std::map<std::string, const SemType*, std::less<>> semtype_by_abbrev_;
};

}  // namespace framelex

#endif  // FRAMELEX_STORE_H_
