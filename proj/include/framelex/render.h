// Human-readable displays. Every function is a pure function of its inputs;
// output is UTF-8 with "\n" line endings and no trailing spaces.

#ifndef FRAMELEX_RENDER_H_
#define FRAMELEX_RENDER_H_

#include <string>
#include <utility>
#include <vector>

#include "framelex/model.h"

namespace framelex {

struct DisplayOptions {
  int wrap_width = 65;  // must be >= 20
};

std::string render_frame(const Frame& frame, const DisplayOptions& options = {});
std::string render_lu(const LexicalUnit& lu, const DisplayOptions& options = {});
std::string render_lexicographic_sentence(const Sentence& sentence,
                                          const DisplayOptions& options = {});
std::string render_fulltext_sentence(const Sentence& sentence, const DisplayOptions& options = {});
// Picks one of the two above by the sentence's source.
std::string render_sentence(const Sentence& sentence, const DisplayOptions& options = {});
std::string render_annotation_set(const AnnotationSet& set, const DisplayOptions& options = {});
std::string render_document(const Document& doc, const DisplayOptions& options = {});
std::string render_semtype(const SemType& semtype, const DisplayOptions& options = {});
std::string render_fe(const FrameElement& fe, const DisplayOptions& options = {});

// One-line forms used in listings, e.g. "<frame ID=268 name=Cooking_creation>".
std::string repr(const Frame& frame);
std::string repr(const LexicalUnit& lu);
std::string repr(const FrameElement& fe);
std::string repr(const FrameRelation& relation);
std::string repr(const FERelation& relation);
std::string repr(const FrameRelationType& type);
std::string repr(const SemType& semtype);
std::string repr(const Sentence& sentence);
std::string repr(const AnnotationSet& set);
std::string repr(const Document& doc);

// The unwrapped rows behind a sentence visualization. rows[0] is the text
// (with padding columns where an index label needed more room); the other
// rows hold markers, labels and indexes. columns[i] is the column of text
// character i, with one extra entry for the position just past the end.
struct Visualization {
  std::vector<std::u32string> rows;
  std::vector<int> columns;
  std::vector<std::pair<std::string, std::string>> abbreviations;  // short -> full
  std::vector<std::string> footer;  // null instantiation lines
  // False when targets of different frames overlap and no inline layout
  // exists; `listing` then holds the fallback text.
  bool inline_layout = true;
  std::string listing;
};

// Target, FE and POS-specific layers of one frame annotation set.
Visualization visualize_frame_set(const AnnotationSet& set);
// Targets of every frame annotation set of a sentence.
Visualization visualize_sentence_targets(const Sentence& sentence);

}  // namespace framelex

#endif  // FRAMELEX_RENDER_H_
