#include <doctest.h>

#include "framelex/text_wrap.h"

using namespace framelex::text;

// Expected values are what Python's textwrap.wrap returns for the same input.
TEST_CASE("wrap agrees with textwrap on plain text") {
  using V = std::vector<std::string>;
  CHECK(wrap("The quick brown fox jumps over the lazy dog", 10) ==
        V{"The quick", "brown fox", "jumps over", "the lazy", "dog"});
  CHECK(wrap("abcdefghijkl", 5) == V{"abcde", "fghij", "kl"});
  CHECK(wrap("a  b   c", 3) == V{"a", "b", "c"});
  CHECK(wrap("  leading space and   gaps here", 8) == V{"leading", "space", "and", "gaps", "here"});
  CHECK(wrap("word word word word word word word ", 12) ==
        V{"word word", "word word", "word word", "word"});
  CHECK(wrap("", 10).empty());
}

TEST_CASE("wrap can keep whitespace at line edges") {
  using V = std::vector<std::u32string>;
  CHECK(wrap(U"ab cd  ", 4, false) == V{U"ab ", U"cd  "});
  CHECK(wrap(U"aa  bb cc", 4, false) == V{U"aa  ", U"bb ", U"cc"});
}

TEST_CASE("wrap counts code points, not bytes") {
  auto lines = wrap("na\xC3\xAFve caf\xC3\xA9 d\xC3\xA9j\xC3\xA0", 10);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "na\xC3\xAFve caf\xC3\xA9");
  CHECK(lines[1] == "d\xC3\xA9j\xC3\xA0");
}

TEST_CASE("utf8 round trip and replacement of bad bytes") {
  std::string s = "a\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80";
  CHECK(decode_utf8(s).size() == 4);
  CHECK(encode_utf8(decode_utf8(s)) == s);
  auto bad = decode_utf8("a\xFF" "b");
  REQUIRE(bad.size() == 3);
  CHECK(bad[1] == U'�');
  auto cut = decode_utf8("a\xE2\x82");
  CHECK(cut.size() == 2);
}

TEST_CASE("mimic_wrap cuts every row where the first row breaks") {
  std::vector<std::u32string> rows = {U"one two three four", U"--- *** ----- ----", U"A   B   C     D"};
  auto pieces = mimic_wrap(rows, 9);
  REQUIRE(pieces.size() == 3);
  REQUIRE(pieces[0].size() >= 2);
  for (std::size_t i = 0; i + 1 < pieces[0].size(); ++i) {
    CHECK(pieces[1][i].size() == pieces[0][i].size());
  }
  std::u32string rejoined;
  for (const auto& p : pieces[1]) rejoined += p;
  CHECK(rejoined == rows[1]);
}

TEST_CASE("transpose pads exhausted rows") {
  std::vector<std::vector<std::u32string>> pieces = {{U"a", U"b"}, {U"c"}};
  auto segments = transpose_pieces(pieces);
  REQUIRE(segments.size() == 2);
  CHECK(segments[0] == std::vector<std::u32string>{U"a", U"c"});
  CHECK(segments[1] == std::vector<std::u32string>{U"b", U" "});
}

TEST_CASE("rstrip_lines removes trailing blanks on every line") {
  CHECK(rstrip_lines("a  \nb\t\n  \nc ") == "a\nb\n\nc");
}
