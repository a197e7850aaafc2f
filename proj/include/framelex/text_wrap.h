// Line wrapping with the same results as Python's textwrap (whitespace-only
// breaks, long words split), computed over code points so that columns stay
// aligned for non-ASCII text.

#ifndef FRAMELEX_TEXT_WRAP_H_
#define FRAMELEX_TEXT_WRAP_H_

#include <string>
#include <string_view>
#include <vector>

namespace framelex::text {

// Malformed sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view text);

std::vector<std::u32string> wrap(std::u32string_view text, int width, bool drop_whitespace = true);
std::vector<std::string> wrap(std::string_view text, int width);

// Wraps rows[0] and cuts every other row at the same lengths. Whatever a row
// has beyond the last cut is wrapped on its own. Returns one list of pieces
// per input row.
std::vector<std::vector<std::u32string>> mimic_wrap(const std::vector<std::u32string>& rows,
                                                    int width);

// Regroups mimic_wrap output into segments: segment i holds piece i of every
// row, with " " standing in for rows that have run out.
std::vector<std::vector<std::u32string>> transpose_pieces(
    const std::vector<std::vector<std::u32string>>& pieces);

std::string rstrip_lines(std::string_view text);

}  // namespace framelex::text

#endif  // FRAMELEX_TEXT_WRAP_H_
