// Parsers for each file of the release layout. All of them are pure
// functions of the bytes they are given; `source` is only used in error
// messages. Elements and attributes outside the subset read here are ignored.

#ifndef FRAMELEX_LOADER_H_
#define FRAMELEX_LOADER_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "framelex/index.h"
#include "framelex/model.h"

namespace framelex {

// Removes tags, decodes character entities, collapses whitespace runs to a
// single space and trims both ends.
std::string strip_markup(std::string_view markup);
// Like strip_markup, but each whitespace character becomes one space and
// runs are kept. Used for displayed definitions.
std::string display_text(std::string_view markup);

std::string frame_url(std::string_view frame_name);
std::string lu_url(int lu_id);

std::vector<FrameIndexEntry> parse_frame_index(std::string_view bytes,
                                               const std::string& source = "frameIndex.xml");
std::vector<LuIndexEntry> parse_lu_index(std::string_view bytes,
                                         const std::string& source = "luIndex.xml");
std::vector<DocumentIndexEntry> parse_fulltext_index(
    std::string_view bytes, const std::string& source = "fulltextIndex.xml");

// The returned frame is detached: relations() and semtypes() are empty and
// the LUs have no exemplars until a Store adopts it.
std::unique_ptr<Frame> parse_frame_file(std::string_view bytes, const std::string& source);

struct LuFile {
  struct Group {
    std::string name;
    std::vector<std::unique_ptr<Sentence>> sentences;
  };
  int lu_id = 0;
  std::string lu_name;
  int frame_id = 0;
  std::string frame_name;
  std::vector<Group> subcorpora;
};
LuFile parse_lu_file(std::string_view bytes, const std::string& source);

std::unique_ptr<Document> parse_fulltext_file(std::string_view bytes, const std::string& source);

std::vector<std::unique_ptr<FrameRelationType>> parse_relations_file(
    std::string_view bytes, const std::string& source = "frRelation.xml");

std::vector<std::unique_ptr<SemType>> parse_semtypes_file(
    std::string_view bytes, const std::string& source = "semTypes.xml");

}  // namespace framelex

#endif  // FRAMELEX_LOADER_H_
