// Test-only reference answers computed by scanning the fixture's raw XML
// text. Nothing here uses the library: elements are located with plain
// string searches and names are matched with std::regex.
#ifndef FRAMELEX_TESTS_ORACLE_H_
#define FRAMELEX_TESTS_ORACLE_H_

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

namespace fs = std::filesystem;

inline std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<fs::path> files_in(const fs::path& dir) {
  std::vector<fs::path> out;
  if (!fs::exists(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".xml") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Element {
  std::map<std::string, std::string> attrs;
  std::string body;  // empty for self-closing tags
};

inline std::map<std::string, std::string> attributes_of(const std::string& tag) {
  static const std::regex kAttr(R"re(([A-Za-z_:]+)="([^"]*)")re");
  std::map<std::string, std::string> attrs;
  for (std::sregex_iterator it(tag.begin(), tag.end(), kAttr), end; it != end; ++it) {
    attrs[(*it)[1]] = (*it)[2];
  }
  return attrs;
}

// Every <name ...> element in document order. Elements of the same name are
// assumed not to nest, which holds for every element the tests look at.
inline std::vector<Element> elements(const std::string& text, const std::string& name) {
  std::vector<Element> out;
  const std::string open = "<" + name;
  const std::string close = "</" + name + ">";
  std::size_t pos = 0;
  while ((pos = text.find(open, pos)) != std::string::npos) {
    std::size_t after = pos + open.size();
    char next = after < text.size() ? text[after] : '\0';
    if (next != ' ' && next != '>' && next != '/' && next != '\n' && next != '\t') {
      pos = after;
      continue;
    }
    std::size_t tag_end = text.find('>', after);
    Element e;
    e.attrs = attributes_of(text.substr(after, tag_end - after));
    if (text[tag_end - 1] != '/') {
      std::size_t end = text.find(close, tag_end);
      e.body = text.substr(tag_end + 1, end - tag_end - 1);
      pos = end + close.size();
    } else {
      pos = tag_end + 1;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

// Perl-style unanchored search with an optional leading (?i).
inline bool matches(std::string pattern, const std::string& name) {
  auto flags = std::regex::ECMAScript;
  if (pattern.rfind("(?i)", 0) == 0) {
    pattern = pattern.substr(4);
    flags |= std::regex::icase;
  }
  return std::regex_search(name, std::regex(pattern, flags));
}

struct Entry {
  int id = 0;
  std::string name;
  int frame_id = 0;
};

inline std::vector<Entry> frames(const fs::path& root) {
  std::vector<Entry> out;
  for (const auto& e : elements(slurp(root / "frameIndex.xml"), "frame")) {
    out.push_back({std::stoi(e.attrs.at("ID")), e.attrs.at("name"), std::stoi(e.attrs.at("ID"))});
  }
  return out;
}

inline std::vector<Entry> lus(const fs::path& root) {
  std::vector<Entry> out;
  for (const auto& e : elements(slurp(root / "luIndex.xml"), "lu")) {
    out.push_back({std::stoi(e.attrs.at("ID")), e.attrs.at("name"), std::stoi(e.attrs.at("frameID"))});
  }
  return out;
}

struct FeEntry {
  int id = 0;
  std::string name;
  int frame_id = 0;
  std::string frame_name;
  std::string semtype;  // as written, empty if none
};

inline std::vector<FeEntry> fes(const fs::path& root) {
  std::vector<FeEntry> out;
  for (const auto& path : files_in(root / "frame")) {
    std::string text = slurp(path);
    auto frame = elements(text, "frame").at(0);
    for (const auto& e : elements(text, "FE")) {
      FeEntry fe{std::stoi(e.attrs.at("ID")), e.attrs.at("name"), std::stoi(frame.attrs.at("ID")),
                 frame.attrs.at("name"), ""};
      auto st = elements(e.body, "semType");
      if (!st.empty()) fe.semtype = st[0].attrs.at("name");
      out.push_back(fe);
    }
  }
  return out;
}

inline std::set<int> filter_ids(const std::vector<Entry>& entries, const std::string& pattern) {
  std::set<int> ids;
  for (const auto& e : entries) {
    if (matches(pattern, e.name)) ids.insert(e.id);
  }
  return ids;
}

// Frame annotation sets: in LU files every set carrying a Target layer, in
// full-text files every set that names an LU.
struct AnnotationCounts {
  std::size_t exemplar_sentences = 0;
  std::size_t exemplar_frame_sets = 0;
  std::size_t fulltext_sentences = 0;
  std::size_t fulltext_frame_sets = 0;
};

inline AnnotationCounts annotation_counts(const fs::path& root) {
  AnnotationCounts c;
  for (const auto& path : files_in(root / "lu")) {
    std::string text = slurp(path);
    c.exemplar_sentences += elements(text, "sentence").size();
    for (const auto& set : elements(text, "annotationSet")) {
      if (set.body.find("name=\"Target\"") != std::string::npos) ++c.exemplar_frame_sets;
    }
  }
  for (const auto& path : files_in(root / "fulltext")) {
    std::string text = slurp(path);
    c.fulltext_sentences += elements(text, "sentence").size();
    for (const auto& set : elements(text, "annotationSet")) {
      if (set.attrs.count("luID")) ++c.fulltext_frame_sets;
    }
  }
  return c;
}

// Frame sets per LU name, from the LU files and the full-text files.
inline std::map<std::string, std::pair<int, int>> frame_sets_by_lu(const fs::path& root) {
  std::map<int, std::string> lu_names;
  for (const auto& e : lus(root)) lu_names[e.id] = e.name;
  std::map<std::string, std::pair<int, int>> out;
  for (const auto& path : files_in(root / "lu")) {
    std::string text = slurp(path);
    std::string name = elements(text, "lexUnit").at(0).attrs.at("name");
    for (const auto& set : elements(text, "annotationSet")) {
      if (set.body.find("name=\"Target\"") != std::string::npos) ++out[name].first;
    }
  }
  for (const auto& path : files_in(root / "fulltext")) {
    for (const auto& set : elements(slurp(path), "annotationSet")) {
      if (set.attrs.count("luName")) ++out[set.attrs.at("luName")].second;
    }
  }
  return out;
}

// name -> parent name ("" for roots).
inline std::map<std::string, std::string> semtype_parents(const fs::path& root) {
  std::map<std::string, std::string> parent;
  for (const auto& e : elements(slurp(root / "semTypes.xml"), "semType")) {
    auto sup = elements(e.body, "superType");
    parent[e.attrs.at("name")] = sup.empty() ? "" : sup[0].attrs.at("superTypeName");
  }
  return parent;
}

inline bool inherits(const std::map<std::string, std::string>& parent, std::string sub,
                     const std::string& super) {
  for (std::size_t steps = 0; !sub.empty() && steps <= parent.size(); ++steps) {
    if (sub == super) return true;
    sub = parent.at(sub);
  }
  return false;
}

// Fixpoint copy of FE semantic types from super FE to sub FE over every
// FERelation. Returns "Frame.FE" -> semtype name for the FEs that gained one.
inline std::map<std::string, std::string> propagated(const fs::path& root) {
  std::map<std::string, std::string> type;
  for (const auto& fe : fes(root)) {
    type[fe.frame_name + "." + fe.name] = fe.semtype;
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& rel : elements(slurp(root / "frRelation.xml"), "frameRelation")) {
    for (const auto& fr : elements(rel.body, "FERelation")) {
      edges.emplace_back(rel.attrs.at("superFrameName") + "." + fr.attrs.at("superFEName"),
                         rel.attrs.at("subFrameName") + "." + fr.attrs.at("subFEName"));
    }
  }
  std::map<std::string, std::string> gained;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [sup, sub] : edges) {
      if (type.count(sup) && type.count(sub) && type[sub].empty() && !type[sup].empty()) {
        type[sub] = type[sup];
        gained[sub] = type[sup];
        changed = true;
      }
    }
  }
  return gained;
}

}  // namespace oracle

#endif  // FRAMELEX_TESTS_ORACLE_H_
