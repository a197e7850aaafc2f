// Domain entities of a FrameNet-style lexicon: frames, frame elements,
// lexical units, frame/FE relations, semantic types, and annotated sentences.
//
// Entities are owned by a Store (or by the value a parser returned) and refer
// to each other through non-owning pointers. A handful of attributes are
// lazy: reading them may make the owning store load another file.

#ifndef FRAMELEX_MODEL_H_
#define FRAMELEX_MODEL_H_

#include <compare>
#include <cstddef>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace framelex {

class Store;
class Frame;
class FrameRelation;
class FrameRelationType;
class Sentence;
class Document;

std::size_t propagate_semtypes(Store& store);

enum class EntityKind {
  kFrame,
  kFrameElement,
  kLexicalUnit,
  kFrameRelation,
  kFERelation,
  kFrameRelationType,
  kSemType,
  kSentence,
  kAnnotationSet,
  kFulltextSentence,
  kDocument,
};

// The `_type` tag: "frame", "fe", "lu", "framerelation", ...
std::string_view kind_tag(EntityKind kind);

// Uniform record contract: every entity reports its kind and a stable list of
// attribute names. Every bracketed attribute name in a rendered display is in
// this list.
class Record {
 public:
  virtual ~Record() = default;

  virtual EntityKind kind() const = 0;
  virtual std::span<const std::string_view> attribute_names() const = 0;

  std::string_view type_tag() const { return kind_tag(kind()); }
  bool has_attribute(std::string_view name) const;
};

// Owning, insertion-ordered name -> entity map.
template <typename T>
class NamedList {
 public:
  class const_iterator {
   public:
    using base = typename std::vector<std::unique_ptr<T>>::const_iterator;
    using iterator_category = std::forward_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using pointer = const T*;
    using reference = const T&;

    const_iterator() = default;
    explicit const_iterator(base it) : it_(it) {}

    reference operator*() const { return **it_; }
    pointer operator->() const { return it_->get(); }
    const_iterator& operator++() {
      ++it_;
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator prev = *this;
      ++it_;
      return prev;
    }
    bool operator==(const const_iterator&) const = default;

   private:
    base it_;
  };

  // Returns false (and drops `item`) when the name is already taken.
  bool add(std::unique_ptr<T> item) {
    auto [it, inserted] = index_.emplace(item->name, items_.size());
    if (!inserted) return false;
    items_.push_back(std::move(item));
    return true;
  }

  const T* find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : items_[it->second].get();
  }
  T* find_mutable(std::string_view name) {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? nullptr : items_[it->second].get();
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const T& operator[](std::size_t i) const { return *items_[i]; }
  T& mutable_at(std::size_t i) { return *items_[i]; }

  const_iterator begin() const { return const_iterator(items_.begin()); }
  const_iterator end() const { return const_iterator(items_.end()); }

 private:
  std::vector<std::unique_ptr<T>> items_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Character span with an inclusive end offset (the release convention).
struct Span {
  int start = 0;
  int end = 0;

  int size() const { return end - start + 1; }
  bool overlaps(const Span& other) const {
    return start <= other.end && other.start <= end;
  }
  auto operator<=>(const Span&) const = default;
};

struct Label {
  std::string name;
  Span span;
};

struct FESpan {
  std::string name;
  Span span;
  int fe_id = 0;
  int rank = 1;
};

// A core FE that is understood but not expressed: itype is DNI, INI or CNI.
struct NullInstantiation {
  std::string name;
  std::string itype;
  int fe_id = 0;
};

// Overt FE spans from every FE layer (rank 1 first, then rank 2, ...) plus
// the null instantiations, both in file order.
struct FEAnnotation {
  std::vector<FESpan> overt;
  std::vector<NullInstantiation> null_instantiations;

  int max_rank() const;
  std::vector<FESpan> rank(int r) const;
};

// A label as it appears in a layer we do not interpret.
struct RawLabel {
  std::string name;
  std::optional<Span> span;
  std::string itype;
};

struct Layer {
  std::string name;
  int rank = 1;
  std::vector<RawLabel> labels;
};

struct SemTypeRef {
  int id = 0;
  std::string name;
};

class SemType final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kSemType; }
  std::span<const std::string_view> attribute_names() const override;

  int id = 0;
  std::string name;
  std::string abbrev;
  std::string definition;
  const SemType* super_type = nullptr;
  std::vector<const SemType*> sub_types;
};

enum class CoreType { kCore, kCoreUnexpressed, kPeripheral, kExtraThematic };

std::string_view to_string(CoreType type);
std::optional<CoreType> parse_core_type(std::string_view text);

class FrameElement final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kFrameElement; }
  std::span<const std::string_view> attribute_names() const override;

  // The semantic type, resolved against the store's registry on first use.
  // After propagate_semtypes() this may be an inferred type. Null if none.
  const SemType* semtype() const;

  int id = 0;
  std::string name;
  std::string abbrev;
  CoreType core_type = CoreType::kCore;
  std::string definition;
  std::string definition_markup;
  std::string created_by;
  std::string created_date;
  std::optional<SemTypeRef> semtype_ref;  // as written in the frame file
  const Frame* frame = nullptr;

 private:
  friend class Store;
  friend std::size_t propagate_semtypes(Store& store);
  mutable const SemType* semtype_ = nullptr;
  mutable bool semtype_resolved_ = false;
};

struct Lexeme {
  std::string name;
  std::string pos;
  bool headword = false;
  bool break_before = false;
  int order = 0;
};

struct SentenceCount {
  int annotated = 0;
  int total = 0;
};

struct SubCorpus {
  std::string name;
  std::vector<const Sentence*> sentences;
};

class LexicalUnit final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kLexicalUnit; }
  std::span<const std::string_view> attribute_names() const override;

  // Exemplar sentences in file order (lazy: reads lu/lu<ID>.xml).
  std::span<const Sentence* const> exemplars() const;
  std::span<const SubCorpus> subcorpora() const;

  int id = 0;
  std::string name;  // lemma plus ".pos"
  std::string pos;
  std::string status;
  std::string definition;
  std::string url;
  std::vector<Lexeme> lexemes;
  SentenceCount sentence_count;
  const Frame* frame = nullptr;
};

class Frame final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kFrame; }
  std::span<const std::string_view> attribute_names() const override;

  // Relations touching this frame, in registry order (lazy: frRelation.xml).
  // Empty for a frame that is not attached to a store.
  std::span<const FrameRelation* const> relations() const;
  // Frame-level semantic types (lazy: semTypes.xml when any are referenced).
  std::vector<const SemType*> semtypes() const;

  Store* store() const { return store_; }

  int id = 0;
  std::string name;
  std::string definition;
  std::string definition_markup;
  std::string url;
  std::string created_by;
  std::string created_date;
  NamedList<FrameElement> fes;
  std::vector<std::vector<const FrameElement*>> core_sets;
  NamedList<LexicalUnit> lexical_units;
  std::vector<SemTypeRef> semtype_refs;

 private:
  friend class Store;
  Store* store_ = nullptr;
};

class FrameRelationType final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kFrameRelationType; }
  std::span<const std::string_view> attribute_names() const override;

  int id = 0;
  std::string name;
  std::string super_frame_label;  // "Parent" for Inheritance
  std::string sub_frame_label;    // "Child" for Inheritance
  std::vector<std::unique_ptr<FrameRelation>> relations;
};

class FERelation final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kFERelation; }
  std::span<const std::string_view> attribute_names() const override;

  // Resolved inside relation->super_frame() / sub_frame(); IntegrityError if
  // the named FE does not exist there.
  const FrameElement& super_fe() const;
  const FrameElement& sub_fe() const;

  int id = 0;
  std::string super_fe_name;
  std::string sub_fe_name;
  int super_fe_id = 0;
  int sub_fe_id = 0;
  const FrameRelation* relation = nullptr;
};

class FrameRelation final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kFrameRelation; }
  std::span<const std::string_view> attribute_names() const override;

  // Frames are resolved by name on first access, loading their files. A name
  // that is not in the frame index raises IntegrityError here, not at parse.
  const Frame& super_frame() const;
  const Frame& sub_frame() const;

  int id = 0;
  const FrameRelationType* type = nullptr;
  std::string super_frame_name;
  std::string sub_frame_name;
  int super_frame_id = 0;
  int sub_frame_id = 0;
  std::vector<std::unique_ptr<FERelation>> fe_relations;

 private:
  friend class Store;
  Store* store_ = nullptr;
};

class AnnotationSet final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kAnnotationSet; }
  std::span<const std::string_view> attribute_names() const override;

  bool unannotated() const { return status == "UNANN"; }
  const Layer* layer(std::string_view name) const;
  // Spanned labels of an uninterpreted layer, in file order.
  std::vector<Label> labels(std::string_view layer_name) const;

  int id = 0;
  std::string status;  // MANUAL, UNANN, or any other code verbatim
  std::string lu_name;
  std::optional<int> lu_id;
  std::string frame_name;
  std::optional<int> frame_id;
  std::vector<Span> targets;
  FEAnnotation fe;
  std::vector<Label> gf;
  std::vector<Label> pt;
  std::vector<Layer> other_layers;
  // False when the LU named by a full-text set is missing from the LU index.
  bool lu_defined = true;
  const Sentence* sentence = nullptr;
};

enum class SentenceSource { kExemplar, kFulltext };

class Sentence final : public Record {
 public:
  EntityKind kind() const override {
    return source == SentenceSource::kExemplar ? EntityKind::kSentence
                                               : EntityKind::kFulltextSentence;
  }
  std::span<const std::string_view> attribute_names() const override;

  // annotation_sets[1..]: the frame annotation sets.
  std::span<const AnnotationSet> frame_sets() const;
  // The single frame set of an exemplar sentence, else null.
  const AnnotationSet* frame_set() const;

  // Points every annotation set back at this sentence. Call once the
  // sentence has reached its final address.
  void link();

  SentenceSource source = SentenceSource::kExemplar;
  int id = 0;
  std::string text;
  int sent_no = 0;
  int a_pos = 0;
  int parag_no = 0;
  std::optional<int> corpus_id;
  std::optional<int> doc_id;
  std::vector<Label> pos;
  std::string pos_tagset;
  std::vector<AnnotationSet> annotation_sets;
  const Document* document = nullptr;
  const LexicalUnit* lu = nullptr;
};

class Document final : public Record {
 public:
  EntityKind kind() const override { return EntityKind::kDocument; }
  std::span<const std::string_view> attribute_names() const override;

  // Sentences in file order (lazy: reads the full-text file).
  std::span<const Sentence* const> sentences() const;

  // Takes ownership of parsed sentences and back-links them to this document.
  void adopt(std::vector<std::unique_ptr<Sentence>> sentences);
  bool loaded() const { return loaded_; }

  int id = 0;
  std::string name;
  std::string corpus_name;
  int corpus_id = 0;
  std::string description;

 private:
  friend class Store;
  Store* store_ = nullptr;
  bool loaded_ = false;
  std::vector<std::unique_ptr<Sentence>> owned_;
  std::vector<const Sentence*> sentences_;
};

}  // namespace framelex

#endif  // FRAMELEX_MODEL_H_
