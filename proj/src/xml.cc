#include "xml.h"

#include <expat.h>

#include <memory>

#include "framelex/errors.h"

namespace framelex::xml {

const std::string* Node::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

const Node* Node::child(std::string_view child_name) const {
  for (const Node& c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

std::vector<const Node*> Node::children_named(std::string_view child_name) const {
  std::vector<const Node*> out;
  for (const Node& c : children) {
    if (c.name == child_name) out.push_back(&c);
  }
  return out;
}

namespace {

struct Builder {
  XML_Parser parser = nullptr;
  Node root;
  bool have_root = false;
  std::vector<Node*> stack;
};

void OnStart(void* data, const XML_Char* name, const XML_Char** atts) {
  auto* b = static_cast<Builder*>(data);
  Node* node;
  if (b->stack.empty()) {
    b->have_root = true;
    node = &b->root;
  } else {
    b->stack.back()->children.emplace_back();
    node = &b->stack.back()->children.back();
  }
  node->name = name;
  node->line = static_cast<int>(XML_GetCurrentLineNumber(b->parser));
  for (int i = 0; atts[i] != nullptr; i += 2) {
    node->attributes.emplace_back(atts[i], atts[i + 1]);
  }
  b->stack.push_back(node);
}

void OnEnd(void* data, const XML_Char*) {
  static_cast<Builder*>(data)->stack.pop_back();
}

void OnText(void* data, const XML_Char* s, int len) {
  auto* b = static_cast<Builder*>(data);
  if (!b->stack.empty()) b->stack.back()->text.append(s, static_cast<size_t>(len));
}

}  // namespace

Node parse(std::string_view bytes, const std::string& source) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw DataError("cannot allocate XML parser");

  Builder builder;
  builder.parser = parser.get();
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);

  if (XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) ==
      XML_STATUS_ERROR) {
    throw ParseError(source, static_cast<int>(XML_GetCurrentLineNumber(parser.get())),
                     XML_ErrorString(XML_GetErrorCode(parser.get())));
  }
  if (!builder.have_root) throw ParseError(source, 1, "no root element");
  return std::move(builder.root);
}

}  // namespace framelex::xml
