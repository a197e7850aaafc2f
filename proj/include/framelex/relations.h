#ifndef FRAMELEX_RELATIONS_H_
#define FRAMELEX_RELATIONS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "framelex/lexicon.h"
#include "framelex/model.h"
#include "framelex/store.h"

namespace framelex {

// With one frame: relations where it is on either side. With two: relations
// joining them in either direction. `type` is a relation type name; unknown
// names throw LookupFailure. Ordered by relation ID.
std::vector<const FrameRelation*> frame_relations(Store& store,
                                                  const std::optional<FrameKey>& frame = {},
                                                  const std::optional<FrameKey>& frame2 = {},
                                                  const std::optional<std::string>& type = {});

// FE mappings of the relations frame_relations() selects, ordered by
// (relation ID, FE relation ID).
std::vector<const FERelation*> fe_relations(Store& store,
                                            const std::optional<FrameKey>& frame = {},
                                            const std::optional<FrameKey>& frame2 = {},
                                            const std::optional<std::string>& type = {});

std::vector<const FrameRelationType*> frame_relation_types(Store& store);

using SemTypeKey = std::variant<int, std::string>;

std::vector<const SemType*> semtypes(Store& store);
// Name first, then abbreviation. A string of digits is an ID.
const SemType& semtype(Store& store, const SemTypeKey& key);
// Reflexive, transitive walk up the superType links.
bool semtype_inherits(Store& store, const SemTypeKey& sub, const SemTypeKey& super);
bool semtype_inherits(const SemType& sub, const SemType& super);

// Copies FE semantic types from super FE to sub FE along every FE relation
// until nothing changes. Existing labels are never replaced. Returns how
// many FEs gained a type. Loads every frame. Needs exclusive access to the
// store: no other thread may read it during the call.
std::size_t propagate_semtypes(Store& store);

}  // namespace framelex

#endif  // FRAMELEX_RELATIONS_H_
