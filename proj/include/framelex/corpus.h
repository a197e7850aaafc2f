#ifndef FRAMELEX_CORPUS_H_
#define FRAMELEX_CORPUS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "framelex/model.h"
#include "framelex/store.h"

namespace framelex {

// Frame annotation sets (never the sentence-level set) whose LU name matches
// the pattern. Exemplar sets come first, then full-text sets; each group is
// ordered by (sentence ID, set ID). UNANN sets are included.
std::vector<const AnnotationSet*> annotations(Store& store,
                                              const std::optional<std::string>& lu_pattern = {},
                                              bool exemplars = true, bool full_text = true);

// Ordered by (LU ID, sentence ID).
std::vector<const Sentence*> exemplars(Store& store,
                                       const std::optional<std::string>& lu_pattern = {});

// Documents by ID, sentences in file order.
std::vector<const Sentence*> ft_sents(Store& store,
                                      const std::optional<std::string>& doc_pattern = {});

const Document& doc(Store& store, int id);
std::vector<const Document*> docs(Store& store, const std::optional<std::string>& pattern = {});

// Walks every exemplar sentence, then every full-text sentence, loading each
// backing file only when the walk reaches it.
class SentenceCursor {
 public:
  explicit SentenceCursor(Store& store) : store_(&store) {}
  // Null once exhausted.
  const Sentence* next();

 private:
  Store* store_;
  int phase_ = 0;
  std::vector<int> ids_;
  std::size_t owner_ = 0;
  std::span<const Sentence* const> current_;
  std::size_t pos_ = 0;
};

SentenceCursor sents(Store& store);

}  // namespace framelex

#endif  // FRAMELEX_CORPUS_H_
