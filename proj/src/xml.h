// Minimal read-only XML tree built on expat. Only what the loaders need:
// element names, attributes, direct character data, and source lines.

#ifndef FRAMELEX_SRC_XML_H_
#define FRAMELEX_SRC_XML_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace framelex::xml {

struct Node {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Node> children;
  std::string text;  // character data directly inside this element
  int line = 0;

  const std::string* attribute(std::string_view key) const;
  const Node* child(std::string_view child_name) const;
  std::vector<const Node*> children_named(std::string_view child_name) const;
};

// Throws ParseError (naming `source` and the failing line) on malformed input.
Node parse(std::string_view bytes, const std::string& source);

}  // namespace framelex::xml

#endif  // FRAMELEX_SRC_XML_H_
