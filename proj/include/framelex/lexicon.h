// Lookup surface over a store. Plural functions take an optional pattern
// (unanchored Perl regex, see Pattern) and return results ordered by ID
// (fes: by frame ID, then FE ID);
// singular functions look up one known entry and throw LookupFailure.

#ifndef FRAMELEX_LEXICON_H_
#define FRAMELEX_LEXICON_H_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framelex/model.h"
#include "framelex/store.h"

namespace framelex {

// A frame given by ID or by name. A name made only of digits is an ID.
using FrameKey = std::variant<int, std::string>;

std::vector<const Frame*> frames(Store& store, const std::optional<std::string>& pattern = {});
const Frame& frame(Store& store, const FrameKey& key);

// `frame_filter` may be an ID, an exact frame name, or a pattern over frame
// names.
std::vector<const LexicalUnit*> lus(Store& store, const std::optional<std::string>& pattern = {},
                                    const std::optional<FrameKey>& frame_filter = {});
const LexicalUnit& lu(Store& store, int id);

std::vector<const FrameElement*> fes(Store& store, const std::optional<std::string>& pattern = {},
                                     const std::optional<FrameKey>& frame_filter = {});

// Reads nothing beyond the frame index.
std::map<int, std::string> frame_ids_and_names(Store& store,
                                               const std::optional<std::string>& pattern = {});

std::vector<const Frame*> frames_by_lemma(Store& store, const std::string& pattern);

// IDs of the frames a restriction argument selects, ascending.
std::vector<int> resolve_frame_filter(Store& store, const FrameKey& filter);

struct OperationInfo {
  std::string name;
  std::string signature;
  std::string summary;
};
// Every public lookup, relation and corpus operation.
const std::vector<OperationInfo>& operations();
std::string help_summary();

}  // namespace framelex

#endif  // FRAMELEX_LEXICON_H_
