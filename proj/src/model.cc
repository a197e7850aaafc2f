#include "framelex/model.h"

#include <algorithm>
#include <array>

#include "framelex/errors.h"
#include "framelex/store.h"

namespace framelex {

namespace {

using namespace std::string_view_literals;

constexpr std::array kFrameAttrs = {
    "cBy"sv,     "cDate"sv,          "name"sv,           "ID"sv, "_type"sv,
    "definition"sv, "definitionMarkup"sv, "frameRelations"sv, "FE"sv, "FEcoreSets"sv,
    "lexUnit"sv, "semTypes"sv,        "URL"sv,
};
constexpr std::array kFEAttrs = {
    "ID"sv,         "name"sv,       "abbrev"sv,           "coreType"sv,
    "cBy"sv,        "cDate"sv,      "_type"sv,            "definition"sv,
    "definitionMarkup"sv, "semType"sv, "frame"sv,
};
constexpr std::array kLUAttrs = {
    "ID"sv,      "name"sv,    "POS"sv,           "status"sv,    "_type"sv,     "definition"sv,
    "frame"sv,   "lexemes"sv, "sentenceCount"sv, "exemplars"sv, "subCorpus"sv, "URL"sv,
};
constexpr std::array kRelationTypeAttrs = {
    "ID"sv, "name"sv, "_type"sv, "superFrameName"sv, "subFrameName"sv, "frameRelations"sv,
};
constexpr std::array kRelationAttrs = {
    "ID"sv,       "_type"sv,          "type"sv,         "superFrame"sv,
    "subFrame"sv, "superFrameName"sv, "subFrameName"sv, "feRelations"sv,
};
constexpr std::array kFERelationAttrs = {
    "ID"sv, "_type"sv, "superFE"sv, "subFE"sv, "superFEName"sv, "subFEName"sv, "frameRelation"sv,
};
constexpr std::array kSemTypeAttrs = {
    "ID"sv, "name"sv, "abbrev"sv, "_type"sv, "definition"sv, "superType"sv, "subTypes"sv,
};
constexpr std::array kExemplarAttrs = {
    "ID"sv,   "_type"sv, "text"sv, "sentNo"sv, "aPos"sv, "POS"sv,  "POS_tagset"sv, "annotationSet"sv,
    "LU"sv,   "frame"sv, "Target"sv, "FE"sv,   "GF"sv,   "PT"sv,   "Verb"sv,       "Noun"sv,
    "Adj"sv,  "Adv"sv,   "Prep"sv, "Scon"sv,   "Art"sv,  "FE2"sv,  "FE3"sv,
};
constexpr std::array kFulltextAttrs = {
    "ID"sv,     "_type"sv, "text"sv,  "sentNo"sv, "aPos"sv,       "paragNo"sv,
    "corpID"sv, "docID"sv, "POS"sv,   "POS_tagset"sv, "annotationSet"sv, "doc"sv,
};
constexpr std::array kAnnotationSetAttrs = {
    "ID"sv,      "_type"sv,  "status"sv, "luName"sv, "luID"sv, "frameName"sv,
    "frameID"sv, "LU"sv,     "frame"sv,  "text"sv,   "Target"sv, "FE"sv,
    "GF"sv,      "PT"sv,     "Verb"sv,   "Noun"sv,   "Adj"sv,    "Adv"sv,
    "Prep"sv,    "Scon"sv,   "Art"sv,    "FE2"sv,    "FE3"sv,    "layers"sv,
    "sent"sv,
};
constexpr std::array kDocumentAttrs = {
    "ID"sv, "_type"sv, "name"sv, "corpusName"sv, "corpusID"sv, "description"sv, "sentence"sv,
};

Store& attached(Store* store, std::string_view what) {
  if (store == nullptr) {
    throw DataError(std::string(what) + " is not attached to a store");
  }
  return *store;
}

}  // namespace

std::string_view kind_tag(EntityKind kind) {
  switch (kind) {
    case EntityKind::kFrame: return "frame";
    case EntityKind::kFrameElement: return "fe";
    case EntityKind::kLexicalUnit: return "lu";
    case EntityKind::kFrameRelation: return "framerelation";
    case EntityKind::kFERelation: return "ferelation";
    case EntityKind::kFrameRelationType: return "framerelationtype";
    case EntityKind::kSemType: return "semtype";
    case EntityKind::kSentence: return "sentence";
    case EntityKind::kAnnotationSet: return "annotationset";
    case EntityKind::kFulltextSentence: return "fulltext_sentence";
    case EntityKind::kDocument: return "document";
  }
  return "unknown";
}

bool Record::has_attribute(std::string_view name) const {
  auto names = attribute_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::span<const std::string_view> Frame::attribute_names() const { return kFrameAttrs; }
std::span<const std::string_view> FrameElement::attribute_names() const { return kFEAttrs; }
std::span<const std::string_view> LexicalUnit::attribute_names() const { return kLUAttrs; }
std::span<const std::string_view> FrameRelationType::attribute_names() const {
  return kRelationTypeAttrs;
}
std::span<const std::string_view> FrameRelation::attribute_names() const { return kRelationAttrs; }
std::span<const std::string_view> FERelation::attribute_names() const { return kFERelationAttrs; }
std::span<const std::string_view> SemType::attribute_names() const { return kSemTypeAttrs; }
std::span<const std::string_view> AnnotationSet::attribute_names() const {
  return kAnnotationSetAttrs;
}
std::span<const std::string_view> Document::attribute_names() const { return kDocumentAttrs; }
std::span<const std::string_view> Sentence::attribute_names() const {
  if (source == SentenceSource::kExemplar) return kExemplarAttrs;
  return kFulltextAttrs;
}

std::string_view to_string(CoreType type) {
  switch (type) {
    case CoreType::kCore: return "Core";
    case CoreType::kCoreUnexpressed: return "Core-Unexpressed";
    case CoreType::kPeripheral: return "Peripheral";
    case CoreType::kExtraThematic: return "Extra-Thematic";
  }
  return "";
}

std::optional<CoreType> parse_core_type(std::string_view text) {
  if (text == "Core") return CoreType::kCore;
  if (text == "Core-Unexpressed") return CoreType::kCoreUnexpressed;
  if (text == "Peripheral") return CoreType::kPeripheral;
  if (text == "Extra-Thematic") return CoreType::kExtraThematic;
  return std::nullopt;
}

int FEAnnotation::max_rank() const {
  int r = overt.empty() ? 1 : 0;
  for (const FESpan& s : overt) r = std::max(r, s.rank);
  return r;
}

std::vector<FESpan> FEAnnotation::rank(int r) const {
  std::vector<FESpan> out;
  for (const FESpan& s : overt) {
    if (s.rank == r) out.push_back(s);
  }
  return out;
}

const SemType* FrameElement::semtype() const {
  if (frame != nullptr && frame->store() != nullptr) return frame->store()->semtype_of(*this);
  return semtype_;
}

std::span<const Sentence* const> LexicalUnit::exemplars() const {
  return attached(frame ? frame->store() : nullptr, "lexical unit " + name).exemplars_of(*this);
}

std::span<const SubCorpus> LexicalUnit::subcorpora() const {
  return attached(frame ? frame->store() : nullptr, "lexical unit " + name).subcorpora_of(*this);
}

std::span<const FrameRelation* const> Frame::relations() const {
  if (store_ == nullptr) return {};
  return store_->relations_of(*this);
}

std::vector<const SemType*> Frame::semtypes() const {
  if (store_ == nullptr) return {};
  return store_->semtypes_of(*this);
}

const Frame& FrameRelation::super_frame() const {
  return attached(store_, "frame relation").related_frame(*this, true);
}

const Frame& FrameRelation::sub_frame() const {
  return attached(store_, "frame relation").related_frame(*this, false);
}

namespace {

const FrameElement& fe_in(const Frame& frame, const std::string& name, int relation_id) {
  const FrameElement* fe = frame.fes.find(name);
  if (fe == nullptr) {
    throw IntegrityError("FE relation in frame relation " + std::to_string(relation_id) +
                         " names FE " + name + " missing from frame " + frame.name);
  }
  return *fe;
}

}  // namespace

const FrameElement& FERelation::super_fe() const {
  return fe_in(relation->super_frame(), super_fe_name, relation->id);
}

const FrameElement& FERelation::sub_fe() const {
  return fe_in(relation->sub_frame(), sub_fe_name, relation->id);
}

const Layer* AnnotationSet::layer(std::string_view name) const {
  for (const Layer& l : other_layers) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

std::vector<Label> AnnotationSet::labels(std::string_view layer_name) const {
  std::vector<Label> out;
  for (const Layer& l : other_layers) {
    if (l.name != layer_name) continue;
    for (const RawLabel& raw : l.labels) {
      if (raw.span) out.push_back({raw.name, *raw.span});
    }
  }
  return out;
}

std::span<const AnnotationSet> Sentence::frame_sets() const {
  if (annotation_sets.empty()) return {};
  return std::span<const AnnotationSet>(annotation_sets).subspan(1);
}

const AnnotationSet* Sentence::frame_set() const {
  if (source != SentenceSource::kExemplar || annotation_sets.size() < 2) return nullptr;
  return &annotation_sets[1];
}

void Sentence::link() {
  for (AnnotationSet& set : annotation_sets) set.sentence = this;
}

std::span<const Sentence* const> Document::sentences() const {
  if (store_ == nullptr) return sentences_;
  return store_->sentences_of(*this);
}

void Document::adopt(std::vector<std::unique_ptr<Sentence>> sentences) {
  owned_ = std::move(sentences);
  sentences_.clear();
  for (auto& s : owned_) {
    s->document = this;
    s->link();
    sentences_.push_back(s.get());
  }
  loaded_ = true;
}

}  // namespace framelex
