#include "framelex/text_wrap.h"

#include <algorithm>

namespace framelex::text {

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  size_t i = 0;
  while (i < bytes.size()) {
    auto b = static_cast<unsigned char>(bytes[i]);
    int extra;
    char32_t cp;
    if (b < 0x80) {
      extra = 0;
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      extra = 1;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      extra = 2;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      extra = 3;
      cp = b & 0x07;
    } else {
      out += U'�';
      ++i;
      continue;
    }
    int k = 1;
    for (; k <= extra; ++k) {
      if (i + k >= bytes.size() || (static_cast<unsigned char>(bytes[i + k]) & 0xC0) != 0x80) break;
      cp = (cp << 6) | (static_cast<unsigned char>(bytes[i + k]) & 0x3F);
    }
    if (k <= extra) {
      out += U'�';
      i += static_cast<size_t>(k);
      continue;
    }
    out += cp;
    i += static_cast<size_t>(extra) + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
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
  return out;
}

namespace {

bool is_ws(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' || c == U'\f';
}

std::vector<std::u32string> chunk(std::u32string_view text) {
  std::vector<std::u32string> chunks;
  size_t i = 0;
  while (i < text.size()) {
    bool ws = is_ws(text[i]);
    size_t j = i;
    while (j < text.size() && is_ws(text[j]) == ws) ++j;
    std::u32string piece(text.substr(i, j - i));
    if (ws) std::fill(piece.begin(), piece.end(), U' ');
    chunks.push_back(std::move(piece));
    i = j;
  }
  return chunks;
}

bool blank(const std::u32string& s) {
  return std::all_of(s.begin(), s.end(), [](char32_t c) { return c == U' '; });
}

}  // namespace

std::vector<std::u32string> wrap(std::u32string_view text, int width, bool drop_whitespace) {
  width = std::max(width, 1);
  auto chunks = chunk(text);
  std::reverse(chunks.begin(), chunks.end());
  std::vector<std::u32string> lines;
  while (!chunks.empty()) {
    std::vector<std::u32string> cur;
    int cur_len = 0;
    if (drop_whitespace && !lines.empty() && blank(chunks.back())) chunks.pop_back();
    while (!chunks.empty()) {
      int len = static_cast<int>(chunks.back().size());
      if (cur_len + len > width) break;
      cur.push_back(std::move(chunks.back()));
      chunks.pop_back();
      cur_len += len;
    }
    if (!chunks.empty() && static_cast<int>(chunks.back().size()) > width) {
      int room = std::max(width - cur_len, 1);
      std::u32string& big = chunks.back();
      cur.push_back(big.substr(0, static_cast<size_t>(room)));
      big.erase(0, static_cast<size_t>(room));
    }
    if (drop_whitespace && !cur.empty() && blank(cur.back())) cur.pop_back();
    if (!cur.empty()) {
      std::u32string line;
      for (auto& c : cur) line += c;
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

std::vector<std::string> wrap(std::string_view text, int width) {
  std::vector<std::string> out;
  for (const auto& line : wrap(decode_utf8(text), width, true)) out.push_back(encode_utf8(line));
  return out;
}

std::vector<std::vector<std::u32string>> mimic_wrap(const std::vector<std::u32string>& rows,
                                                    int width) {
  std::vector<std::vector<std::u32string>> out;
  if (rows.empty()) return out;
  std::vector<std::u32string> first = wrap(rows[0], width, false);
  if (first.empty()) first.emplace_back();
  out.push_back(first);
  for (size_t r = 1; r < rows.size(); ++r) {
    std::u32string rest = rows[r];
    std::vector<std::u32string> pieces;
    size_t cut = 0;
    while (!rest.empty() && cut + 1 < first.size()) {
      size_t n = std::min(first[cut].size(), rest.size());
      pieces.push_back(rest.substr(0, n));
      rest.erase(0, n);
      ++cut;
    }
    if (!rest.empty()) {
      auto tail = wrap(rest, width, false);
      pieces.insert(pieces.end(), tail.begin(), tail.end());
    }
    out.push_back(std::move(pieces));
  }
  return out;
}

std::vector<std::vector<std::u32string>> transpose_pieces(
    const std::vector<std::vector<std::u32string>>& pieces) {
  size_t segments = 0;
  for (const auto& p : pieces) segments = std::max(segments, p.size());
  std::vector<std::vector<std::u32string>> out(segments);
  for (size_t s = 0; s < segments; ++s) {
    for (const auto& p : pieces) out[s].push_back(s < p.size() ? p[s] : std::u32string(U" "));
  }
  return out;
}

std::string rstrip_lines(std::string_view text) {
  std::string out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    size_t stop = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(start, stop - start);
    size_t keep = line.find_last_not_of(" \t");
    out.append(line.substr(0, keep == std::string_view::npos ? 0 : keep + 1));
    if (nl == std::string_view::npos) break;
    out += '\n';
    start = nl + 1;
  }
  return out;
}

}  // namespace framelex::text
