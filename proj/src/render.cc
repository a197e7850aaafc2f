#include "framelex/render.h"

#include <algorithm>
#include <array>
#include <map>
#include <string_view>

#include "framelex/errors.h"
#include "framelex/loader.h"
#include "framelex/text_wrap.h"

namespace framelex {

namespace {

using text::decode_utf8;
using text::encode_utf8;

constexpr char32_t kPad = U'\x1f';  // widening column, blanked after wrapping
constexpr std::array<std::string_view, 7> kPosLayers = {"Verb", "Noun", "Adj", "Adv",
                                                        "Prep", "Scon", "Art"};

int checked_width(const DisplayOptions& options) {
  if (options.wrap_width < 20) {
    throw std::invalid_argument("wrap width must be at least 20");
  }
  return options.wrap_width;
}

// FE listings may run this many columns past the wrap width.
constexpr int kFeLineOverhang = 5;

template <typename T>
std::string shown_definition(const T& entity) {
  return entity.definition_markup.empty() ? entity.definition
                                          : display_text(entity.definition_markup);
}

// Wrapped body text, each line prefixed with two spaces.
std::string indented_block(std::string_view body, int width) {
  std::string out;
  for (const std::string& line : text::wrap(body, width)) out += "  " + line + "\n";
  return out;
}

std::string plural(std::size_t n, std::string_view one, std::string_view many) {
  return std::to_string(n) + " " + std::string(n == 1 ? one : many);
}

class Abbreviations {
 public:
  // The label drawn for `name` in a span `width` columns wide.
  std::u32string shorten(const std::u32string& name, int width) {
    if (static_cast<int>(name.size()) <= width) return name;
    std::u32string shortened = name.substr(0, static_cast<size_t>(width));
    int r = 0;
    while (const std::u32string* full = find(shortened)) {
      if (*full == name) return shortened;
      ++r;
      shortened = name.substr(0, static_cast<size_t>(std::max(width - 1, 0))) +
                  decode_utf8(std::to_string(r));
    }
    items_.emplace_back(shortened, name);
    return shortened;
  }

  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [s, full] : items_) out.emplace_back(encode_utf8(s), encode_utf8(full));
    return out;
  }

 private:
  const std::u32string* find(const std::u32string& key) const {
    for (const auto& [s, full] : items_) {
      if (s == key) return &full;
    }
    return nullptr;
  }

  std::vector<std::pair<std::u32string, std::u32string>> items_;
};

void put(std::u32string& row, int col, std::u32string_view what) {
  size_t need = static_cast<size_t>(col) + what.size();
  if (row.size() < need) row.resize(need, U' ');
  std::copy(what.begin(), what.end(), row.begin() + col);
}

std::u32string ljust(std::u32string s, int width) {
  if (static_cast<int>(s.size()) < width) s.resize(static_cast<size_t>(width), U' ');
  return s;
}

void check_span(const Span& span, std::size_t length, const Sentence& sentence) {
  if (span.start < 0 || span.end < span.start || span.end > static_cast<int>(length)) {
    throw IntegrityError("sentence " + std::to_string(sentence.id) + ": span " +
                         std::to_string(span.start) + ".." + std::to_string(span.end) +
                         " lies outside the text");
  }
}

struct Item {
  Span span;
  std::u32string label;
  char32_t marker;
};

// Greedy packing of spans into rows with no overlap inside a row.
std::vector<std::vector<Item>> pack(std::vector<Item> items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return a.span < b.span; });
  std::vector<std::vector<Item>> rows;
  for (Item& item : items) {
    auto fits = [&](const std::vector<Item>& row) {
      return row.empty() || row.back().span.end < item.span.start;
    };
    auto it = std::find_if(rows.begin(), rows.end(), fits);
    if (it == rows.end()) {
      rows.emplace_back();
      it = rows.end() - 1;
    }
    it->push_back(std::move(item));
  }
  return rows;
}

void draw(const std::vector<Item>& row, std::u32string& markers, std::u32string& labels,
          Abbreviations& abbrevs) {
  for (const Item& item : row) {
    int width = item.span.size();
    put(markers, item.span.start, std::u32string(static_cast<size_t>(width), item.marker));
    put(labels, item.span.start, abbrevs.shorten(item.label, width));
  }
}

std::string lowercase_no_dash(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '-') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// Wraps the rows together and joins the segments with a blank line.
std::vector<std::string> wrap_rows(const std::vector<std::u32string>& rows, int width) {
  std::vector<std::string> lines;
  auto segments = text::transpose_pieces(text::mimic_wrap(rows, width));
  for (size_t s = 0; s < segments.size(); ++s) {
    if (s > 0) lines.emplace_back();
    for (std::u32string row : segments[s]) {
      std::replace(row.begin(), row.end(), kPad, U' ');
      lines.push_back(encode_utf8(row));
    }
  }
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return text::rstrip_lines(out);
}

std::string abbreviation_line(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string out = " (";
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out += ", ";
    out += pairs[i].first + "=" + pairs[i].second;
  }
  return out + ")";
}

std::string frame_set_visual_text(const AnnotationSet& set, int width) {
  Visualization v = visualize_frame_set(set);
  std::vector<std::string> lines = wrap_rows(v.rows, width);
  if (!v.footer.empty()) {
    lines.insert(lines.end(), 3, std::string());
    lines.insert(lines.end(), v.footer.begin(), v.footer.end());
  }
  if (!v.abbreviations.empty()) lines.push_back(abbreviation_line(v.abbreviations));
  return join_lines(lines);
}

std::string layers_line(const AnnotationSet& set) {
  std::string out = "[text] + [Target] + [FE]";
  for (auto name : kPosLayers) {
    if (!set.labels(name).empty()) out += " + [" + std::string(name) + "]";
  }
  int ranks = set.fe.max_rank();
  for (int r = 2; r <= std::min(ranks, 3); ++r) {
    if (!set.fe.rank(r).empty()) out += " + [FE" + std::to_string(r) + "]";
  }
  return out;
}

std::string lu_line(const AnnotationSet& set) {
  if (!set.lu_id) return "[LU] Not found!";
  return "[LU] (" + std::to_string(*set.lu_id) + ") " + set.lu_name + " in " + set.frame_name;
}

std::string frame_line(const AnnotationSet& set) {
  return "[frame] (" + (set.frame_id ? std::to_string(*set.frame_id) : std::string("?")) + ") " +
         set.frame_name;
}

}  // namespace

// ---- visualizations --------------------------------------------------------

Visualization visualize_frame_set(const AnnotationSet& set) {
  if (set.sentence == nullptr) throw DataError("annotation set is not attached to a sentence");
  const Sentence& sentence = *set.sentence;
  Visualization v;
  std::u32string text = decode_utf8(sentence.text);
  for (int i = 0; i <= static_cast<int>(text.size()); ++i) v.columns.push_back(i);

  for (const Span& t : set.targets) check_span(t, text.size(), sentence);
  for (const FESpan& fe : set.fe.overt) check_span(fe.span, text.size(), sentence);

  std::vector<Item> pos_items;
  for (auto layer : kPosLayers) {
    for (const Label& l : set.labels(layer)) {
      if (l.name == "X") continue;
      check_span(l.span, text.size(), sentence);
      pos_items.push_back({l.span, decode_utf8(lowercase_no_dash(l.name)), U'^'});
    }
  }

  std::vector<Item> rank1;
  for (const FESpan& fe : set.fe.rank(1)) rank1.push_back({fe.span, decode_utf8(fe.name), U'-'});
  bool pos_separate = std::any_of(pos_items.begin(), pos_items.end(), [&](const Item& p) {
    return std::any_of(rank1.begin(), rank1.end(),
                       [&](const Item& fe) { return fe.span.overlaps(p.span); });
  });
  if (!pos_separate) rank1.insert(rank1.end(), pos_items.begin(), pos_items.end());

  auto rank1_rows = pack(rank1);
  bool target_alone = false;
  if (!rank1_rows.empty()) {
    for (const Span& t : set.targets) {
      for (const Item& item : rank1_rows.front()) target_alone |= item.span.overlaps(t);
    }
  }

  Abbreviations abbrevs;
  v.rows.push_back(text);
  if (target_alone) {
    std::u32string markers;
    for (const Span& t : set.targets) {
      put(markers, t.start, std::u32string(static_cast<size_t>(t.size()), U'*'));
    }
    v.rows.push_back(markers);
  }
  if (pos_separate) {
    for (const auto& row : pack(pos_items)) {
      std::u32string markers, labels;
      draw(row, markers, labels, abbrevs);
      v.rows.push_back(markers);
      v.rows.push_back(labels);
    }
  }
  if (rank1_rows.empty()) rank1_rows.emplace_back();
  for (size_t r = 0; r < rank1_rows.size(); ++r) {
    std::u32string markers, labels;
    draw(rank1_rows[r], markers, labels, abbrevs);
    if (r == 0 && !target_alone) {
      for (const Span& t : set.targets) {
        put(markers, t.start, std::u32string(static_cast<size_t>(t.size()), U'*'));
      }
    }
    v.rows.push_back(markers);
    v.rows.push_back(labels);
  }
  for (int rank = 2; rank <= set.fe.max_rank(); ++rank) {
    std::vector<Item> items;
    for (const FESpan& fe : set.fe.rank(rank)) {
      items.push_back({fe.span, decode_utf8(fe.name), U'-'});
    }
    for (const auto& row : pack(items)) {
      std::u32string markers, labels;
      draw(row, markers, labels, abbrevs);
      v.rows.push_back(markers);
      v.rows.push_back(labels);
    }
  }

  for (const NullInstantiation& ni : set.fe.null_instantiations) {
    v.footer.push_back("[" + ni.name + ":" + ni.itype + "]");
  }
  v.abbreviations = abbrevs.pairs();
  return v;
}

Visualization visualize_sentence_targets(const Sentence& sentence) {
  Visualization v;
  std::u32string text = decode_utf8(sentence.text);

  struct Entry {
    Span span;
    std::string frame;
    std::string index;  // empty on the later pieces of a discontiguous target
    std::string set_index;
  };
  std::vector<Entry> entries;
  auto sets = sentence.frame_sets();
  for (size_t a = 0; a < sets.size(); ++a) {
    const AnnotationSet& set = sets[a];
    std::string index = "[" + std::to_string(a + 1) + "]";
    bool unann = set.unannotated();
    if (unann || !set.lu_defined) {
      index += " ";
      if (unann) index += "!";
      if (!set.lu_defined) index += "?";
    }
    std::vector<Span> targets = set.targets;
    std::sort(targets.begin(), targets.end());
    for (size_t t = 0; t < targets.size(); ++t) {
      check_span(targets[t], text.size(), sentence);
      entries.push_back({targets[t], set.frame_name, t == 0 ? index : std::string(), index});
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.span != b.span) return a.span < b.span;
    return a.frame < b.frame;
  });

  std::vector<Entry> merged;
  for (Entry& e : entries) {
    if (!merged.empty() && e.span.start <= merged.back().span.end) {
      Entry& prev = merged.back();
      if (prev.span == e.span && prev.frame == e.frame) {
        std::string combined = prev.index + e.index;
        for (auto [from, to] : {std::pair{" !", "! "}, std::pair{" ?", "? "}}) {
          for (size_t p = combined.find(from); p != std::string::npos; p = combined.find(from, p + 1)) {
            combined.replace(p, 2, to);
          }
        }
        prev.index = combined;
        continue;
      }
      v.inline_layout = false;
      v.listing = sentence.text;
      for (const Entry& x : entries) {
        v.listing += "\n" + x.set_index + " " +
                     encode_utf8(text.substr(static_cast<size_t>(x.span.start),
                                             static_cast<size_t>(x.span.size()))) +
                     " :: " + x.frame;
      }
      v.listing += "\n(Unable to display sentence with targets marked inline due to overlap)";
      return v;
    }
    merged.push_back(e);
  }

  std::vector<int> shift(text.size() + 1, 0);
  v.rows.push_back(text);
  if (!merged.empty()) {
    std::u32string& s0 = v.rows[0];
    std::u32string s1, s11, s2;
    Abbreviations abbrevs;
    int i = 0;
    int adjust = 0;
    for (const Entry& e : merged) {
      int j = e.span.start;
      int k = e.span.end + 1;
      int w = k - j;
      s1 += std::u32string(static_cast<size_t>(j - i), U' ') +
            std::u32string(static_cast<size_t>(w), U'*');
      std::u32string label = e.index.empty() ? U"" : abbrevs.shorten(decode_utf8(e.frame), w);
      s11 += std::u32string(static_cast<size_t>(j - i), U' ') + ljust(label, w);
      std::u32string index = decode_utf8(e.index);
      if (static_cast<int>(index.size()) > w) {
        int amt = static_cast<int>(index.size()) - w;
        size_t at = std::min(static_cast<size_t>(k + adjust), s0.size());
        s0.insert(at, static_cast<size_t>(amt), kPad);
        s1.append(static_cast<size_t>(amt), U' ');
        s11.append(static_cast<size_t>(amt), U' ');
        adjust += amt;
        for (size_t p = static_cast<size_t>(std::min<int>(k, static_cast<int>(text.size())));
             p < shift.size(); ++p) {
          shift[p] += amt;
        }
      }
      s2 += std::u32string(static_cast<size_t>(j - i), U' ') + ljust(index, w);
      i = k;
    }
    v.rows.push_back(s1);
    v.rows.push_back(s11);
    v.rows.push_back(s2);
    v.abbreviations = abbrevs.pairs();
  }
  for (size_t p = 0; p <= text.size(); ++p) v.columns.push_back(static_cast<int>(p) + shift[p]);
  return v;
}

// ---- displays --------------------------------------------------------------

std::string render_frame(const Frame& frame, const DisplayOptions& options) {
  int width = checked_width(options);
  std::string out;
  out += "frame (" + std::to_string(frame.id) + "): " + frame.name + "\n\n";
  out += "[URL] " + frame.url + "\n\n";
  out += "[definition]\n" + indented_block(shown_definition(frame), width) + "\n";

  auto semtypes = frame.semtypes();
  out += "[semTypes] " + std::to_string(semtypes.size()) + " semantic types\n";
  if (!semtypes.empty()) {
    out += "  ";
    for (size_t i = 0; i < semtypes.size(); ++i) {
      if (i > 0) out += ", ";
      out += semtypes[i]->name + "(" + std::to_string(semtypes[i]->id) + ")";
    }
    out += "\n";
  }

  auto relations = frame.relations();
  out += "\n[frameRelations] " + std::to_string(relations.size()) + " frame relations\n";
  for (const FrameRelation* rel : relations) out += "  " + repr(*rel) + "\n";

  out += "\n[lexUnit] " + std::to_string(frame.lexical_units.size()) + " lexical units\n";
  std::vector<const LexicalUnit*> lus;
  for (const LexicalUnit& lu : frame.lexical_units) lus.push_back(&lu);
  std::sort(lus.begin(), lus.end(),
            [](const LexicalUnit* a, const LexicalUnit* b) { return a->name < b->name; });
  std::string lu_list;
  for (size_t i = 0; i < lus.size(); ++i) {
    if (i > 0) lu_list += ", ";
    lu_list += lus[i]->name + " (" + std::to_string(lus[i]->id) + ")";
  }
  out += indented_block(lu_list, width) + "\n";

  out += "\n[FE] " + std::to_string(frame.fes.size()) + " frame elements\n";
  for (CoreType ct : {CoreType::kCore, CoreType::kCoreUnexpressed, CoreType::kPeripheral,
                      CoreType::kExtraThematic}) {
    std::vector<std::string> entries;
    for (const FrameElement& fe : frame.fes) {
      if (fe.core_type == ct) entries.push_back(fe.name + " (" + std::to_string(fe.id) + ")");
    }
    if (entries.empty()) continue;
    std::sort(entries.begin(), entries.end());
    std::string name(to_string(ct));
    std::string line = std::string(16 - std::min<size_t>(16, name.size()), ' ') + name + ": ";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i > 0) line += ", ";
      line += entries[i];
    }
    for (const std::string& piece : text::wrap(line, width + kFeLineOverhang)) out += piece + "\n";
  }

  out += "\n[FEcoreSets] " + std::to_string(frame.core_sets.size()) +
         " frame element core sets\n";
  for (const auto& set : frame.core_sets) {
    out += "  ";
    for (size_t i = 0; i < set.size(); ++i) {
      if (i > 0) out += ", ";
      out += set[i]->name;
    }
    out += "\n";
  }
  return text::rstrip_lines(out);
}

std::string render_lu(const LexicalUnit& lu, const DisplayOptions& options) {
  int width = checked_width(options);
  std::string out;
  out += "lexical unit (" + std::to_string(lu.id) + "): " + lu.name + "\n\n";
  out += "[URL] " + lu.url + "\n\n";
  out += "[definition]\n" + indented_block(lu.definition, width) + "\n";
  if (lu.frame != nullptr) {
    out += "[frame] (" + std::to_string(lu.frame->id) + ") " + lu.frame->name + "\n\n";
  }
  out += "[POS] " + lu.pos + "\n\n";
  out += "[status] " + lu.status + "\n\n";
  out += "[lexemes]";
  for (const Lexeme& lx : lu.lexemes) out += " " + lx.name + "/" + lx.pos;
  out += "\n\n";
  out += "[sentenceCount] " + std::to_string(lu.sentence_count.annotated) + " annotated, " +
         std::to_string(lu.sentence_count.total) + " total\n";
  if (lu.frame != nullptr && lu.frame->store() != nullptr) {
    auto subcorpora = lu.subcorpora();
    out += "\n[subCorpus] " + plural(subcorpora.size(), "subcorpus", "subcorpora") + "\n";
    std::string names;
    for (size_t i = 0; i < subcorpora.size(); ++i) {
      if (i > 0) names += ", ";
      names += subcorpora[i].name;
    }
    out += indented_block(names, width);
    out += "\n[exemplars] " + plural(lu.exemplars().size(), "sentence", "sentences") + "\n";
  }
  return text::rstrip_lines(out);
}

std::string render_lexicographic_sentence(const Sentence& sentence,
                                          const DisplayOptions& options) {
  int width = checked_width(options);
  const AnnotationSet* set = sentence.frame_set();
  std::string out = "exemplar sentence (" + std::to_string(sentence.id) + "):\n";
  out += "[sentNo] " + std::to_string(sentence.sent_no) + "\n";
  out += "[aPos] " + std::to_string(sentence.a_pos) + "\n";
  if (set == nullptr) {
    out += "\n[annotationSet] " + std::to_string(sentence.annotation_sets.size()) +
           " annotation sets\n";
    out += "\n[text]\n\n" + join_lines(wrap_rows({decode_utf8(sentence.text)}, width));
    return text::rstrip_lines(out);
  }
  out += "\n" + lu_line(*set) + "\n";
  out += "\n" + frame_line(*set) + "\n";
  out += "\n[annotationSet] " + std::to_string(sentence.annotation_sets.size()) +
         " annotation sets\n";
  out += "\n[POS] " + std::to_string(sentence.pos.size()) + " tags\n";
  out += "\n[POS_tagset] " + sentence.pos_tagset + "\n";
  out += "\n[GF] " + plural(set->gf.size(), "relation", "relations") + "\n";
  out += "\n[PT] " + plural(set->pt.size(), "phrase", "phrases") + "\n";
  out += "\n" + layers_line(*set) + "\n\n";
  out += frame_set_visual_text(*set, width);
  return text::rstrip_lines(out);
}

std::string render_annotation_set(const AnnotationSet& set, const DisplayOptions& options) {
  int width = checked_width(options);
  std::string out = "annotation set (" + std::to_string(set.id) + "):\n";
  out += "\n[status] " + set.status + "\n";
  out += "\n" + lu_line(set) + "\n";
  out += "\n" + frame_line(set) + "\n";
  out += "\n[GF] " + plural(set.gf.size(), "relation", "relations") + "\n";
  out += "\n[PT] " + plural(set.pt.size(), "phrase", "phrases") + "\n";
  out += "\n" + layers_line(set) + "\n\n";
  out += frame_set_visual_text(set, width);
  return text::rstrip_lines(out);
}

std::string render_fulltext_sentence(const Sentence& sentence, const DisplayOptions& options) {
  int width = checked_width(options);
  std::string doc_name = sentence.document ? sentence.document->name : std::string("?");
  std::string out =
      "full-text sentence (" + std::to_string(sentence.id) + ") in " + doc_name + ":\n\n";
  out += "\n[POS] " + std::to_string(sentence.pos.size()) + " tags\n";
  out += "\n[POS_tagset] " + sentence.pos_tagset + "\n\n";
  out += "[text] + [annotationSet]\n\n";
  Visualization v = visualize_sentence_targets(sentence);
  if (!v.inline_layout) {
    out += v.listing + "\n";
    return text::rstrip_lines(out);
  }
  std::vector<std::string> lines = wrap_rows(v.rows, width);
  if (!v.abbreviations.empty()) lines.push_back(abbreviation_line(v.abbreviations));
  out += join_lines(lines);
  return text::rstrip_lines(out);
}

std::string render_sentence(const Sentence& sentence, const DisplayOptions& options) {
  if (sentence.source == SentenceSource::kExemplar) {
    return render_lexicographic_sentence(sentence, options);
  }
  return render_fulltext_sentence(sentence, options);
}

std::string render_document(const Document& doc, const DisplayOptions& options) {
  checked_width(options);
  std::string out = "full-text document (" + std::to_string(doc.id) + ") " + doc.name + ":\n";
  out += "\n[corpusName] " + doc.corpus_name + "\n";
  out += "\n[description] " + doc.description + "\n";
  auto sentences = doc.sentences();
  if (!sentences.empty()) {
    out += "\n";
    for (size_t i = 0; i < sentences.size(); ++i) {
      out += "[" + std::to_string(i) + "] " + sentences[i]->text + "\n";
    }
  }
  return text::rstrip_lines(out);
}

std::string render_fe(const FrameElement& fe, const DisplayOptions& options) {
  int width = checked_width(options);
  std::string out = "frame element (" + std::to_string(fe.id) + "): " + fe.name + "\n";
  if (fe.frame != nullptr) {
    out += "    of " + fe.frame->name + "(" + std::to_string(fe.frame->id) + ")\n";
  }
  out += "\n[definition]\n" + indented_block(shown_definition(fe), width);
  out += "\n[abbrev] " + fe.abbrev + "\n";
  out += "\n[coreType] " + std::string(to_string(fe.core_type)) + "\n";
  const SemType* st = fe.semtype();
  out += "\n[semType] " + (st ? st->name + "(" + std::to_string(st->id) + ")" : "none") + "\n";
  return text::rstrip_lines(out);
}

std::string render_semtype(const SemType& st, const DisplayOptions& options) {
  int width = checked_width(options);
  std::string out = "semantic type (" + std::to_string(st.id) + "): " + st.name + "\n";
  out += "\n[abbrev] " + st.abbrev + "\n";
  out += "\n[definition]\n" + indented_block(st.definition, width);
  out += "\n[superType] " +
         (st.super_type ? st.super_type->name + "(" + std::to_string(st.super_type->id) + ")"
                        : std::string("none")) +
         "\n";
  out += "\n[subTypes] " + std::to_string(st.sub_types.size()) + " subtypes\n";
  std::string subs;
  for (size_t i = 0; i < st.sub_types.size(); ++i) {
    if (i > 0) subs += ", ";
    subs += st.sub_types[i]->name + "(" + std::to_string(st.sub_types[i]->id) + ")";
  }
  if (!subs.empty()) out += indented_block(subs, width);
  return text::rstrip_lines(out);
}

// ---- one-line forms --------------------------------------------------------

std::string repr(const Frame& frame) {
  return "<frame ID=" + std::to_string(frame.id) + " name=" + frame.name + ">";
}

std::string repr(const LexicalUnit& lu) {
  return "<lu ID=" + std::to_string(lu.id) + " name=" + lu.name + ">";
}

std::string repr(const FrameElement& fe) {
  return "<fe ID=" + std::to_string(fe.id) + " name=" + fe.name +
         (fe.frame ? " frame=" + fe.frame->name : std::string()) + ">";
}

std::string repr(const FrameRelation& rel) {
  return "<" + rel.type->super_frame_label + "=" + rel.super_frame_name + " -- " +
         rel.type->name + " -> " + rel.type->sub_frame_label + "=" + rel.sub_frame_name + ">";
}

std::string repr(const FERelation& fer) {
  const FrameRelation& rel = *fer.relation;
  return "<" + rel.type->super_frame_label + "=" + rel.super_frame_name + "." +
         fer.super_fe_name + " -- " + rel.type->name + " -> " + rel.type->sub_frame_label + "=" +
         rel.sub_frame_name + "." + fer.sub_fe_name + ">";
}

std::string repr(const FrameRelationType& type) {
  return "<framerelationtype ID=" + std::to_string(type.id) + " name=" + type.name + ">";
}

std::string repr(const SemType& st) {
  return "<semtype ID=" + std::to_string(st.id) + " name=" + st.name + ">";
}

std::string repr(const Sentence& s) {
  return "<" + std::string(s.type_tag()) + " ID=" + std::to_string(s.id) + " text=\"" + s.text +
         "\">";
}

std::string repr(const AnnotationSet& set) {
  std::string out = "<annotationset ID=" + std::to_string(set.id);
  if (!set.lu_name.empty()) out += " lu=" + set.lu_name;
  if (!set.frame_name.empty()) out += " frame=" + set.frame_name;
  out += " status=" + set.status;
  if (set.sentence) out += " sentence=" + std::to_string(set.sentence->id);
  return out + ">";
}

std::string repr(const Document& doc) {
  return "<document ID=" + std::to_string(doc.id) + " name=" + doc.name + ">";
}

}  // namespace framelex
