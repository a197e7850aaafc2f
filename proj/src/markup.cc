#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "framelex/loader.h"

namespace framelex {

namespace {

void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Decodes the entity starting at text[i] == '&'. Returns the number of bytes
// consumed, or 0 when it is not a recognizable entity.
size_t decode_entity(std::string_view text, size_t i, std::string& out) {
  size_t semi = text.find(';', i);
  if (semi == std::string_view::npos || semi - i > 10) return 0;
  std::string_view name = text.substr(i + 1, semi - i - 1);
  if (name == "lt") {
    out += '<';
  } else if (name == "gt") {
    out += '>';
  } else if (name == "amp") {
    out += '&';
  } else if (name == "quot") {
    out += '"';
  } else if (name == "apos") {
    out += '\'';
  } else if (name.size() > 1 && name[0] == '#') {
    uint32_t cp = 0;
    bool hex = name[1] == 'x' || name[1] == 'X';
    std::string_view digits = name.substr(hex ? 2 : 1);
    if (digits.empty()) return 0;
    for (char c : digits) {
      int v;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (hex && std::isxdigit(static_cast<unsigned char>(c))) {
        v = std::tolower(static_cast<unsigned char>(c)) - 'a' + 10;
      } else {
        return 0;
      }
      cp = cp * (hex ? 16 : 10) + static_cast<uint32_t>(v);
      if (cp > 0x10FFFF) return 0;
    }
    append_utf8(out, cp);
  } else {
    return 0;
  }
  return semi - i + 1;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string untag_and_decode(std::string_view markup) {
  std::string untagged;
  untagged.reserve(markup.size());
  for (size_t i = 0; i < markup.size();) {
    if (markup[i] == '<') {
      size_t close = markup.find('>', i);
      if (close != std::string_view::npos) {
        i = close + 1;
        continue;
      }
    }
    untagged += markup[i++];
  }

  std::string decoded;
  decoded.reserve(untagged.size());
  for (size_t i = 0; i < untagged.size();) {
    if (untagged[i] == '&') {
      size_t used = decode_entity(untagged, i, decoded);
      if (used > 0) {
        i += used;
        continue;
      }
    }
    decoded += untagged[i++];
  }
  return decoded;
}

}  // namespace

std::string strip_markup(std::string_view markup) {
  std::string decoded = untag_and_decode(markup);
  std::string out;
  out.reserve(decoded.size());
  bool pending_space = false;
  for (char c : decoded) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

std::string display_text(std::string_view markup) {
  std::string decoded = untag_and_decode(markup);
  for (char& c : decoded) {
    if (is_space(c)) c = ' ';
  }
  size_t first = decoded.find_first_not_of(' ');
  if (first == std::string::npos) return "";
  return decoded.substr(first, decoded.find_last_not_of(' ') - first + 1);
}

}  // namespace framelex
