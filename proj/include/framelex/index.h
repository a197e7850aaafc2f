#ifndef FRAMELEX_INDEX_H_
#define FRAMELEX_INDEX_H_

#include <string>

namespace framelex {

struct FrameIndexEntry {
  int id = 0;
  std::string name;
};

struct LuIndexEntry {
  int id = 0;
  std::string name;
  std::string status;
  int frame_id = 0;
  std::string frame_name;
};

struct DocumentIndexEntry {
  int id = 0;
  std::string name;
  std::string description;
  int corpus_id = 0;
  std::string corpus_name;
};

}  // namespace framelex

#endif  // FRAMELEX_INDEX_H_
