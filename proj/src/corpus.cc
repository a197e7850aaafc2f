#include "framelex/corpus.h"

#include <algorithm>

#include "framelex/pattern.h"

namespace framelex {

namespace {

std::vector<int> matching_lu_ids(Store& store, const std::optional<std::string>& pattern) {
  std::optional<Pattern> re;
  if (pattern) re.emplace(*pattern);
  std::vector<int> ids;
  for (const LuIndexEntry& e : store.lu_index()) {
    if (!re || re->matches(e.name)) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<int> document_ids(Store& store) {
  std::vector<int> ids;
  for (const DocumentIndexEntry& e : store.document_index()) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool by_sentence_then_id(const AnnotationSet* a, const AnnotationSet* b) {
  if (a->sentence->id != b->sentence->id) return a->sentence->id < b->sentence->id;
  return a->id < b->id;
}

}  // namespace

std::vector<const Sentence*> exemplars(Store& store, const std::optional<std::string>& lu_pattern) {
  std::vector<const Sentence*> out;
  for (int id : matching_lu_ids(store, lu_pattern)) {
    auto sentences = store.lu(id).exemplars();
    std::vector<const Sentence*> group(sentences.begin(), sentences.end());
    std::stable_sort(group.begin(), group.end(),
                     [](const Sentence* a, const Sentence* b) { return a->id < b->id; });
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

std::vector<const AnnotationSet*> annotations(Store& store,
                                              const std::optional<std::string>& lu_pattern,
                                              bool with_exemplars, bool with_full_text) {
  std::vector<const AnnotationSet*> out;
  if (with_exemplars) {
    std::vector<const AnnotationSet*> group;
    for (const Sentence* s : exemplars(store, lu_pattern)) {
      for (const AnnotationSet& set : s->frame_sets()) group.push_back(&set);
    }
    std::stable_sort(group.begin(), group.end(), by_sentence_then_id);
    out.insert(out.end(), group.begin(), group.end());
  }
  if (with_full_text) {
    std::optional<Pattern> re;
    if (lu_pattern) re.emplace(*lu_pattern);
    std::vector<const AnnotationSet*> group;
    for (const Sentence* s : ft_sents(store)) {
      for (const AnnotationSet& set : s->frame_sets()) {
        if (!re || re->matches(set.lu_name)) group.push_back(&set);
      }
    }
    std::stable_sort(group.begin(), group.end(), by_sentence_then_id);
    out.insert(out.end(), group.begin(), group.end());
  }
  return out;
}

std::vector<const Sentence*> ft_sents(Store& store, const std::optional<std::string>& doc_pattern) {
  std::vector<const Sentence*> out;
  for (const Document* d : docs(store, doc_pattern)) {
    auto sentences = d->sentences();
    out.insert(out.end(), sentences.begin(), sentences.end());
  }
  return out;
}

const Document& doc(Store& store, int id) { return store.document(id); }

std::vector<const Document*> docs(Store& store, const std::optional<std::string>& pattern) {
  std::optional<Pattern> re;
  if (pattern) re.emplace(*pattern);
  std::vector<const Document*> out;
  for (int id : document_ids(store)) {
    const Document& d = store.document(id);
    if (!re || re->matches(d.name)) out.push_back(&d);
  }
  return out;
}

const Sentence* SentenceCursor::next() {
  while (true) {
    if (pos_ < current_.size()) return current_[pos_++];
    if (phase_ == 0) {
      ids_ = matching_lu_ids(*store_, std::nullopt);
      owner_ = 0;
      phase_ = 1;
    } else if (phase_ == 2) {
      ids_ = document_ids(*store_);
      owner_ = 0;
      phase_ = 3;
    }
    if (phase_ == 1) {
      if (owner_ == ids_.size()) {
        phase_ = 2;
        continue;
      }
      current_ = store_->lu(ids_[owner_++]).exemplars();
    } else if (phase_ == 3) {
      if (owner_ == ids_.size()) return nullptr;
      current_ = store_->document(ids_[owner_++]).sentences();
    }
    pos_ = 0;
  }
}

SentenceCursor sents(Store& store) { return SentenceCursor(store); }

}  // namespace framelex
