#include "framelex/lexicon.h"

#include <algorithm>
#include <set>

#include "framelex/errors.h"
#include "framelex/pattern.h"

namespace framelex {

namespace {

std::optional<Pattern> compile(const std::optional<std::string>& pattern) {
  if (!pattern) return std::nullopt;
  return Pattern(*pattern);
}

bool accepts(const std::optional<Pattern>& p, std::string_view name) {
  return !p || p->matches(name);
}

std::optional<int> as_id(const FrameKey& key) {
  if (const int* id = std::get_if<int>(&key)) return *id;
  const std::string& s = std::get<std::string>(key);
  if (s.empty() || s.size() > 9 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  return std::stoi(s);
}

}  // namespace

std::vector<const Frame*> frames(Store& store, const std::optional<std::string>& pattern) {
  auto re = compile(pattern);
  std::vector<int> ids;
  for (const FrameIndexEntry& e : store.frame_index()) {
    if (accepts(re, e.name)) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  std::vector<const Frame*> out;
  for (int id : ids) out.push_back(&store.frame(id));
  return out;
}

const Frame& frame(Store& store, const FrameKey& key) {
  if (auto id = as_id(key)) return store.frame(*id);
  return store.frame(std::get<std::string>(key));
}

std::vector<int> resolve_frame_filter(Store& store, const FrameKey& filter) {
  std::vector<int> ids;
  if (auto id = as_id(filter)) {
    for (const FrameIndexEntry& e : store.frame_index()) {
      if (e.id == *id) ids.push_back(e.id);
    }
    return ids;
  }
  const std::string& text = std::get<std::string>(filter);
  if (auto exact = store.frame_id(text)) return {*exact};
  Pattern re(text);
  for (const FrameIndexEntry& e : store.frame_index()) {
    if (re.matches(e.name)) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<const LexicalUnit*> lus(Store& store, const std::optional<std::string>& pattern,
                                    const std::optional<FrameKey>& frame_filter) {
  auto re = compile(pattern);
  std::optional<std::set<int>> allowed;
  if (frame_filter) {
    auto ids = resolve_frame_filter(store, *frame_filter);
    allowed.emplace(ids.begin(), ids.end());
    if (allowed->empty()) return {};
  }
  std::vector<int> ids;
  for (const LuIndexEntry& e : store.lu_index()) {
    if (allowed && !allowed->count(e.frame_id)) continue;
    if (accepts(re, e.name)) ids.push_back(e.id);
  }
  std::sort(ids.begin(), ids.end());
  std::vector<const LexicalUnit*> out;
  for (int id : ids) out.push_back(&store.lu(id));
  return out;
}

const LexicalUnit& lu(Store& store, int id) { return store.lu(id); }

std::vector<const FrameElement*> fes(Store& store, const std::optional<std::string>& pattern,
                                     const std::optional<FrameKey>& frame_filter) {
  auto re = compile(pattern);
  std::vector<int> frame_ids;
  if (frame_filter) {
    frame_ids = resolve_frame_filter(store, *frame_filter);
  } else {
    for (const FrameIndexEntry& e : store.frame_index()) frame_ids.push_back(e.id);
    std::sort(frame_ids.begin(), frame_ids.end());
  }
  std::vector<const FrameElement*> out;
  for (int id : frame_ids) {
    const Frame& f = store.frame(id);
    std::vector<const FrameElement*> in_frame;
    for (const FrameElement& fe : f.fes) {
      if (accepts(re, fe.name)) in_frame.push_back(&fe);
    }
    std::sort(in_frame.begin(), in_frame.end(),
              [](const FrameElement* a, const FrameElement* b) { return a->id < b->id; });
    out.insert(out.end(), in_frame.begin(), in_frame.end());
  }
  return out;
}

std::map<int, std::string> frame_ids_and_names(Store& store,
                                               const std::optional<std::string>& pattern) {
  auto re = compile(pattern);
  std::map<int, std::string> out;
  for (const FrameIndexEntry& e : store.frame_index()) {
    if (accepts(re, e.name)) out.emplace(e.id, e.name);
  }
  return out;
}

std::vector<const Frame*> frames_by_lemma(Store& store, const std::string& pattern) {
  Pattern re(pattern);
  std::set<int> ids;
  for (const LuIndexEntry& e : store.lu_index()) {
    if (re.matches(e.name)) ids.insert(e.frame_id);
  }
  std::vector<const Frame*> out;
  for (int id : ids) out.push_back(&store.frame(id));
  return out;
}

const std::vector<OperationInfo>& operations() {
  static const std::vector<OperationInfo> kOps = {
      {"frames", "frames(pattern)", "frames whose name matches the pattern"},
      {"frame", "frame(nameOrId)", "one frame by exact name or ID"},
      {"lus", "lus(pattern, frame)", "lexical units by name pattern, optionally within frames"},
      {"lu", "lu(id)", "one lexical unit by ID"},
      {"fes", "fes(pattern, frame)", "frame elements by name pattern, optionally within frames"},
      {"frame_ids_and_names", "frame_ids_and_names(pattern)",
       "map of frame IDs to names, from the index only"},
      {"frames_by_lemma", "frames_by_lemma(pattern)",
       "frames having some lexical unit that matches the pattern"},
      {"help", "help()", "this summary"},
      {"frame_relations", "frame_relations(frame, frame2, type)",
       "frame-to-frame relations, filtered by one or two frames and a type"},
      {"fe_relations", "fe_relations(frame, frame2, type)",
       "FE-to-FE mappings of the matching frame relations"},
      {"frame_relation_types", "frame_relation_types()", "all frame relation types"},
      {"semtypes", "semtypes()", "all semantic types"},
      {"semtype", "semtype(key)", "one semantic type by name, abbreviation or ID"},
      {"semtype_inherits", "semtype_inherits(sub, super)",
       "whether one semantic type is a subtype of another"},
      {"propagate_semtypes", "propagate_semtypes()",
       "copy FE semantic types down FE relations; returns the number added"},
      {"annotations", "annotations(luPattern, exemplars, full_text)",
       "frame annotation sets for matching lexical units"},
      {"exemplars", "exemplars(luPattern)", "exemplar sentences of matching lexical units"},
      {"ft_sents", "ft_sents(docPattern)", "sentences of matching full-text documents"},
      {"sents", "sents()", "every exemplar sentence, then every full-text sentence"},
      {"doc", "doc(id)", "one full-text document by ID"},
      {"docs", "docs(pattern)", "full-text documents whose name matches the pattern"},
  };
  return kOps;
}

std::string help_summary() {
  std::size_t width = 0;
  for (const auto& op : operations()) width = std::max(width, op.signature.size());
  std::string out;
  for (const auto& op : operations()) {
    out += op.signature;
    out.append(width + 2 - op.signature.size(), ' ');
    out += op.summary;
    out += '\n';
  }
  return out;
}

}  // namespace framelex
