#include "framelex/loader.h"

#include <charconv>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "framelex/errors.h"
#include "xml.h"

namespace framelex {

namespace {

using xml::Node;

void expect_root(const Node& root, std::string_view name, const std::string& source) {
  if (root.name != name) {
    throw ParseError(source, root.line,
                     "expected <" + std::string(name) + "> root, found <" + root.name + ">");
  }
}

std::string attr_or(const Node& node, std::string_view key, std::string fallback = {}) {
  const std::string* v = node.attribute(key);
  return v ? *v : fallback;
}

std::optional<int> to_int(const std::string& text) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

std::optional<int> optional_int(const Node& node, std::string_view key,
                                const std::string& source) {
  const std::string* v = node.attribute(key);
  if (v == nullptr) return std::nullopt;
  auto value = to_int(*v);
  if (!value) {
    throw ParseError(source, node.line,
                     "attribute " + std::string(key) + " of <" + node.name +
                         "> is not an integer: '" + *v + "'");
  }
  return value;
}

int required_int(const Node& node, std::string_view key, const std::string& source) {
  auto value = optional_int(node, key, source);
  if (!value) {
    throw ParseError(source, node.line,
                     "<" + node.name + "> lacks required attribute " + std::string(key));
  }
  return *value;
}

int int_or(const Node& node, std::string_view key, const std::string& source, int fallback) {
  return optional_int(node, key, source).value_or(fallback);
}

std::string required_string(const Node& node, std::string_view key, const std::string& source) {
  const std::string* v = node.attribute(key);
  if (v == nullptr || v->empty()) {
    throw ParseError(source, node.line,
                     "<" + node.name + "> lacks required attribute " + std::string(key));
  }
  return *v;
}

std::string child_text(const Node& node, std::string_view name) {
  const Node* c = node.child(name);
  return c ? c->text : std::string();
}

// ---- annotated sentences ---------------------------------------------------

constexpr std::string_view kPosTagsets[] = {"BNC", "PENN"};

struct ParsedLabel {
  std::string name;
  std::optional<Span> span;
  std::string itype;
  int fe_id = 0;
};

ParsedLabel parse_label(const Node& node, const std::string& source) {
  ParsedLabel label;
  label.name = attr_or(node, "name");
  label.itype = attr_or(node, "itype");
  label.fe_id = int_or(node, "feID", source, 0);
  auto start = optional_int(node, "start", source);
  auto end = optional_int(node, "end", source);
  if (start.has_value() != end.has_value()) {
    throw ParseError(source, node.line, "label " + label.name + " has only one of start/end");
  }
  if (start) {
    if (*end < *start) {
      throw IntegrityError(source + ":" + std::to_string(node.line) + ": label " + label.name +
                           " ends (" + std::to_string(*end) + ") before it starts (" +
                           std::to_string(*start) + ")");
    }
    label.span = Span{*start, *end};
  }
  return label;
}

bool is_frame_set(const Node& set) {
  if (set.attribute("luName") || set.attribute("frameName") || set.attribute("luID") ||
      set.attribute("frameID")) {
    return true;
  }
  for (const Node* layer : set.children_named("layer")) {
    std::string name = attr_or(*layer, "name");
    if (name == "Target" || name == "FE") return true;
  }
  return false;
}

void fill_sentence_level(Sentence& sentence, AnnotationSet& set, const Node& node,
                         const std::string& source) {
  for (const Node* layer_node : node.children_named("layer")) {
    Layer layer;
    layer.name = attr_or(*layer_node, "name");
    layer.rank = int_or(*layer_node, "rank", source, 1);
    for (const Node* l : layer_node->children_named("label")) {
      ParsedLabel p = parse_label(*l, source);
      layer.labels.push_back({p.name, p.span, p.itype});
    }
    bool is_pos = false;
    for (auto tagset : kPosTagsets) is_pos = is_pos || layer.name == tagset;
    if (is_pos && sentence.pos_tagset.empty()) {
      sentence.pos_tagset = layer.name;
      for (const RawLabel& raw : layer.labels) {
        if (raw.span) sentence.pos.push_back({raw.name, *raw.span});
      }
    }
    set.other_layers.push_back(std::move(layer));
  }
}

void fill_frame_set(AnnotationSet& set, const Node& node, const std::string& source) {
  set.lu_name = attr_or(node, "luName", set.lu_name);
  set.frame_name = attr_or(node, "frameName", set.frame_name);
  if (auto v = optional_int(node, "luID", source)) set.lu_id = v;
  if (auto v = optional_int(node, "frameID", source)) set.frame_id = v;

  std::vector<std::pair<int, std::vector<FESpan>>> fe_ranks;
  for (const Node* layer_node : node.children_named("layer")) {
    std::string name = attr_or(*layer_node, "name");
    int rank = int_or(*layer_node, "rank", source, 1);
    std::vector<ParsedLabel> labels;
    for (const Node* l : layer_node->children_named("label")) {
      labels.push_back(parse_label(*l, source));
    }
    if (name == "Target") {
      for (const ParsedLabel& p : labels) {
        if (p.span) set.targets.push_back(*p.span);
      }
    } else if (name == "FE") {
      std::vector<FESpan> spans;
      for (const Node* l : layer_node->children_named("label")) {
        ParsedLabel p = parse_label(*l, source);
        if (p.span && !p.itype.empty()) {
          throw IntegrityError(source + ":" + std::to_string(l->line) + ": FE label " + p.name +
                               " has both a span and itype " + p.itype);
        }
        if (p.span) {
          spans.push_back({p.name, *p.span, p.fe_id, rank});
        } else if (!p.itype.empty()) {
          if (p.itype != "DNI" && p.itype != "INI" && p.itype != "CNI" && p.itype != "INC") {
            throw IntegrityError(source + ":" + std::to_string(l->line) + ": FE label " +
                                 p.name + " has unknown itype " + p.itype);
          }
          set.fe.null_instantiations.push_back({p.name, p.itype, p.fe_id});
        }
      }
      fe_ranks.emplace_back(rank, std::move(spans));
    } else if (name == "GF" || name == "PT") {
      auto& dest = name == "GF" ? set.gf : set.pt;
      for (const ParsedLabel& p : labels) {
        if (p.span) dest.push_back({p.name, *p.span});
      }
    } else {
      Layer layer{name, rank, {}};
      for (const ParsedLabel& p : labels) layer.labels.push_back({p.name, p.span, p.itype});
      set.other_layers.push_back(std::move(layer));
    }
  }
  std::stable_sort(fe_ranks.begin(), fe_ranks.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [rank, spans] : fe_ranks) {
    for (FESpan& s : spans) set.fe.overt.push_back(std::move(s));
  }
}

struct SetDefaults {
  std::string lu_name;
  std::optional<int> lu_id;
  std::string frame_name;
  std::optional<int> frame_id;
};

std::unique_ptr<Sentence> parse_sentence(const Node& node, SentenceSource kind,
                                         const SetDefaults& defaults, const std::string& source) {
  auto sentence = std::make_unique<Sentence>();
  sentence->source = kind;
  sentence->id = required_int(node, "ID", source);
  sentence->sent_no = int_or(node, "sentNo", source, 0);
  sentence->a_pos = int_or(node, "aPos", source, 0);
  sentence->parag_no = int_or(node, "paragNo", source, 0);
  sentence->corpus_id = optional_int(node, "corpID", source);
  sentence->doc_id = optional_int(node, "docID", source);
  sentence->text = child_text(node, "text");

  auto sets = node.children_named("annotationSet");
  bool first = true;
  for (const Node* set_node : sets) {
    bool frame_set = is_frame_set(*set_node);
    if (first && frame_set) {
      // Keep index 0 for the sentence-level set even when the file has none.
      sentence->annotation_sets.emplace_back();
    }
    AnnotationSet set;
    set.id = int_or(*set_node, "ID", source, 0);
    set.status = attr_or(*set_node, "status");
    if (!first || frame_set) {
      set.lu_name = defaults.lu_name;
      set.lu_id = defaults.lu_id;
      set.frame_name = defaults.frame_name;
      set.frame_id = defaults.frame_id;
      fill_frame_set(set, *set_node, source);
    } else {
      fill_sentence_level(*sentence, set, *set_node, source);
    }
    sentence->annotation_sets.push_back(std::move(set));
    first = false;
  }
  if (sentence->annotation_sets.empty()) sentence->annotation_sets.emplace_back();
  sentence->link();
  return sentence;
}

}  // namespace

std::string frame_url(std::string_view frame_name) {
  return "https://framenet2.icsi.berkeley.edu/fnReports/data/frame/" + std::string(frame_name) +
         ".xml";
}

std::string lu_url(int lu_id) {
  return "https://framenet2.icsi.berkeley.edu/fnReports/data/lu/lu" + std::to_string(lu_id) +
         ".xml";
}

std::vector<FrameIndexEntry> parse_frame_index(std::string_view bytes, const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "frameIndex", source);
  std::vector<FrameIndexEntry> out;
  std::unordered_set<int> ids;
  std::unordered_set<std::string> names;
  for (const Node* f : root.children_named("frame")) {
    FrameIndexEntry e{required_int(*f, "ID", source), required_string(*f, "name", source)};
    if (!ids.insert(e.id).second) {
      throw IntegrityError(source + ":" + std::to_string(f->line) + ": duplicate frame ID " +
                           std::to_string(e.id));
    }
    if (!names.insert(e.name).second) {
      throw IntegrityError(source + ":" + std::to_string(f->line) + ": duplicate frame name " +
                           e.name);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<LuIndexEntry> parse_lu_index(std::string_view bytes, const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "luIndex", source);
  std::vector<LuIndexEntry> out;
  std::unordered_set<int> ids;
  for (const Node* lu : root.children_named("lu")) {
    LuIndexEntry e;
    e.id = required_int(*lu, "ID", source);
    e.name = required_string(*lu, "name", source);
    e.status = attr_or(*lu, "status");
    e.frame_id = required_int(*lu, "frameID", source);
    e.frame_name = attr_or(*lu, "frameName");
    if (!ids.insert(e.id).second) {
      throw IntegrityError(source + ":" + std::to_string(lu->line) + ": duplicate LU ID " +
                           std::to_string(e.id));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<DocumentIndexEntry> parse_fulltext_index(std::string_view bytes,
                                                     const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "fulltextIndex", source);
  std::vector<DocumentIndexEntry> out;
  std::unordered_set<int> ids;
  for (const Node* corpus : root.children_named("corpus")) {
    int corpus_id = int_or(*corpus, "ID", source, 0);
    std::string corpus_name = attr_or(*corpus, "name");
    for (const Node* doc : corpus->children_named("document")) {
      DocumentIndexEntry e;
      e.id = required_int(*doc, "ID", source);
      e.name = required_string(*doc, "name", source);
      e.description = attr_or(*doc, "description");
      e.corpus_id = corpus_id;
      e.corpus_name = corpus_name;
      if (!ids.insert(e.id).second) {
        throw IntegrityError(source + ":" + std::to_string(doc->line) +
                             ": duplicate document ID " + std::to_string(e.id));
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::unique_ptr<Frame> parse_frame_file(std::string_view bytes, const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "frame", source);
  auto frame = std::make_unique<Frame>();
  frame->id = required_int(root, "ID", source);
  frame->name = required_string(root, "name", source);
  frame->created_by = attr_or(root, "cBy");
  frame->created_date = attr_or(root, "cDate");
  frame->definition_markup = child_text(root, "definition");
  frame->definition = strip_markup(frame->definition_markup);
  frame->url = frame_url(frame->name);

  for (const Node* st : root.children_named("semType")) {
    frame->semtype_refs.push_back({required_int(*st, "ID", source), attr_or(*st, "name")});
  }

  for (const Node* fe_node : root.children_named("FE")) {
    auto fe = std::make_unique<FrameElement>();
    fe->id = required_int(*fe_node, "ID", source);
    fe->name = required_string(*fe_node, "name", source);
    fe->abbrev = attr_or(*fe_node, "abbrev");
    std::string core = attr_or(*fe_node, "coreType");
    auto core_type = parse_core_type(core);
    if (!core_type) {
      throw IntegrityError(source + ":" + std::to_string(fe_node->line) + ": FE " + fe->name +
                           " has unknown coreType '" + core + "'");
    }
    fe->core_type = *core_type;
    fe->created_by = attr_or(*fe_node, "cBy");
    fe->created_date = attr_or(*fe_node, "cDate");
    fe->definition_markup = child_text(*fe_node, "definition");
    fe->definition = strip_markup(fe->definition_markup);
    if (const Node* st = fe_node->child("semType")) {
      fe->semtype_ref = SemTypeRef{required_int(*st, "ID", source), attr_or(*st, "name")};
    }
    fe->frame = frame.get();
    std::string name = fe->name;
    if (!frame->fes.add(std::move(fe))) {
      throw IntegrityError(source + ":" + std::to_string(fe_node->line) + ": duplicate FE name " +
                           name);
    }
  }

  for (const Node* set_node : root.children_named("FEcoreSet")) {
    std::vector<const FrameElement*> members;
    for (const Node* m : set_node->children_named("memberFE")) {
      std::string name = required_string(*m, "name", source);
      const FrameElement* fe = frame->fes.find(name);
      if (fe == nullptr) {
        throw IntegrityError(source + ":" + std::to_string(m->line) + ": core set member " +
                             name + " is not an FE of " + frame->name);
      }
      members.push_back(fe);
    }
    frame->core_sets.push_back(std::move(members));
  }

  for (const Node* lu_node : root.children_named("lexUnit")) {
    auto lu = std::make_unique<LexicalUnit>();
    lu->id = required_int(*lu_node, "ID", source);
    lu->name = required_string(*lu_node, "name", source);
    lu->pos = attr_or(*lu_node, "POS");
    lu->status = attr_or(*lu_node, "status");
    lu->definition = strip_markup(child_text(*lu_node, "definition"));
    lu->url = lu_url(lu->id);
    auto dot = lu->name.rfind('.');
    if (dot == std::string::npos || dot + 1 == lu->name.size()) {
      throw IntegrityError(source + ":" + std::to_string(lu_node->line) + ": LU name " +
                           lu->name + " lacks a .pos suffix");
    }
    if (const Node* count = lu_node->child("sentenceCount")) {
      lu->sentence_count.annotated = int_or(*count, "annotated", source, 0);
      lu->sentence_count.total = int_or(*count, "total", source, 0);
      if (lu->sentence_count.annotated < 0 ||
          lu->sentence_count.annotated > lu->sentence_count.total) {
        throw IntegrityError(source + ":" + std::to_string(count->line) + ": LU " + lu->name +
                             " has inconsistent sentenceCount");
      }
    }
    for (const Node* lx : lu_node->children_named("lexeme")) {
      Lexeme lexeme;
      lexeme.name = attr_or(*lx, "name");
      lexeme.pos = attr_or(*lx, "POS");
      lexeme.headword = attr_or(*lx, "headword") == "true";
      lexeme.break_before = attr_or(*lx, "breakBefore") == "true";
      lexeme.order = int_or(*lx, "order", source, 0);
      lu->lexemes.push_back(std::move(lexeme));
    }
    lu->frame = frame.get();
    std::string name = lu->name;
    if (!frame->lexical_units.add(std::move(lu))) {
      throw IntegrityError(source + ":" + std::to_string(lu_node->line) + ": duplicate LU name " +
                           name);
    }
  }
  return frame;
}

LuFile parse_lu_file(std::string_view bytes, const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "lexUnit", source);
  LuFile file;
  file.lu_id = required_int(root, "ID", source);
  file.lu_name = required_string(root, "name", source);
  file.frame_name = attr_or(root, "frame");
  file.frame_id = int_or(root, "frameID", source, 0);

  SetDefaults defaults{file.lu_name, file.lu_id, file.frame_name,
                       file.frame_id ? std::optional<int>(file.frame_id) : std::nullopt};
  for (const Node* group : root.children_named("subCorpus")) {
    LuFile::Group g;
    g.name = attr_or(*group, "name");
    for (const Node* s : group->children_named("sentence")) {
      g.sentences.push_back(parse_sentence(*s, SentenceSource::kExemplar, defaults, source));
    }
    file.subcorpora.push_back(std::move(g));
  }
  return file;
}

std::unique_ptr<Document> parse_fulltext_file(std::string_view bytes, const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "fullTextAnnotation", source);
  auto doc = std::make_unique<Document>();
  const Node* header = root.child("header");
  const Node* corpus = header ? header->child("corpus") : nullptr;
  const Node* doc_node = corpus ? corpus->child("document") : nullptr;
  if (doc_node == nullptr) {
    throw ParseError(source, header ? header->line : root.line,
                     "missing header/corpus/document metadata");
  }
  doc->id = required_int(*doc_node, "ID", source);
  doc->name = required_string(*doc_node, "name", source);
  doc->description = attr_or(*doc_node, "description");
  doc->corpus_name = attr_or(*corpus, "name");
  doc->corpus_id = int_or(*corpus, "ID", source, 0);

  std::vector<std::unique_ptr<Sentence>> sentences;
  for (const Node* s : root.children_named("sentence")) {
    sentences.push_back(parse_sentence(*s, SentenceSource::kFulltext, {}, source));
  }
  doc->adopt(std::move(sentences));
  return doc;
}

std::vector<std::unique_ptr<FrameRelationType>> parse_relations_file(std::string_view bytes,
                                                                     const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "frameRelations", source);
  std::vector<std::unique_ptr<FrameRelationType>> out;
  std::unordered_set<std::string> type_names;
  for (const Node* type_node : root.children_named("frameRelationType")) {
    auto type = std::make_unique<FrameRelationType>();
    type->id = required_int(*type_node, "ID", source);
    type->name = required_string(*type_node, "name", source);
    type->super_frame_label = attr_or(*type_node, "superFrameName");
    type->sub_frame_label = attr_or(*type_node, "subFrameName");
    if (!type_names.insert(type->name).second) {
      throw IntegrityError(source + ":" + std::to_string(type_node->line) +
                           ": duplicate relation type " + type->name);
    }
    for (const Node* rel_node : type_node->children_named("frameRelation")) {
      auto rel = std::make_unique<FrameRelation>();
      rel->id = required_int(*rel_node, "ID", source);
      rel->type = type.get();
      rel->super_frame_name = required_string(*rel_node, "superFrameName", source);
      rel->sub_frame_name = required_string(*rel_node, "subFrameName", source);
      rel->super_frame_id = int_or(*rel_node, "supID", source, 0);
      rel->sub_frame_id = int_or(*rel_node, "subID", source, 0);
      for (const Node* fer_node : rel_node->children_named("FERelation")) {
        auto fer = std::make_unique<FERelation>();
        fer->id = required_int(*fer_node, "ID", source);
        fer->super_fe_name = required_string(*fer_node, "superFEName", source);
        fer->sub_fe_name = required_string(*fer_node, "subFEName", source);
        fer->super_fe_id = int_or(*fer_node, "supID", source, 0);
        fer->sub_fe_id = int_or(*fer_node, "subID", source, 0);
        fer->relation = rel.get();
        rel->fe_relations.push_back(std::move(fer));
      }
      type->relations.push_back(std::move(rel));
    }
    out.push_back(std::move(type));
  }
  return out;
}

std::vector<std::unique_ptr<SemType>> parse_semtypes_file(std::string_view bytes,
                                                          const std::string& source) {
  Node root = xml::parse(bytes, source);
  expect_root(root, "semTypes", source);
  std::vector<std::unique_ptr<SemType>> out;
  std::unordered_map<int, SemType*> by_id;
  std::vector<std::pair<SemType*, std::pair<int, int>>> supers;  // (node, (supID, line))
  for (const Node* st_node : root.children_named("semType")) {
    auto st = std::make_unique<SemType>();
    st->id = required_int(*st_node, "ID", source);
    st->name = required_string(*st_node, "name", source);
    st->abbrev = attr_or(*st_node, "abbrev");
    st->definition = strip_markup(child_text(*st_node, "definition"));
    if (!by_id.emplace(st->id, st.get()).second) {
      throw IntegrityError(source + ":" + std::to_string(st_node->line) +
                           ": duplicate semantic type ID " + std::to_string(st->id));
    }
    if (const Node* sup = st_node->child("superType")) {
      supers.push_back({st.get(), {required_int(*sup, "supID", source), sup->line}});
    }
    out.push_back(std::move(st));
  }
  for (auto& [node, link] : supers) {
    auto it = by_id.find(link.first);
    if (it == by_id.end()) {
      throw IntegrityError(source + ":" + std::to_string(link.second) + ": semantic type " +
                           node->name + " names missing superType ID " +
                           std::to_string(link.first));
    }
    node->super_type = it->second;
  }
  for (const auto& st : out) {
    std::set<const SemType*> seen{st.get()};
    for (const SemType* up = st->super_type; up != nullptr; up = up->super_type) {
      if (!seen.insert(up).second) {
        throw IntegrityError(source + ": superType cycle through " + st->name);
      }
    }
  }
  for (const auto& st : out) {
    if (st->super_type) by_id[st->super_type->id]->sub_types.push_back(st.get());
  }
  return out;
}

}  // namespace framelex
