#ifndef FRAMELEX_TESTS_SUPPORT_H_
#define FRAMELEX_TESTS_SUPPORT_H_

#include <filesystem>
#include <memory>
#include <random>
#include <vector>
#include <string>

#include "framelex/store.h"
#include "oracle.h"

namespace testing {

inline const std::filesystem::path kFixture = FRAMELEX_FIXTURE_DIR;
inline const std::filesystem::path kGoldenDir = FRAMELEX_GOLDEN_DIR;

inline std::unique_ptr<framelex::Store> open_fixture() {
  return framelex::Store::open(kFixture);
}

inline std::string golden(const std::string& name) { return oracle::slurp(kGoldenDir / name); }

// Small patterns over the characters that occur in fixture names, mixing
// literals, classes, wildcards and anchors.
inline std::string random_pattern(std::mt19937& rng) {
  static const std::vector<std::string> kPieces = {
      "a", "e", "i", "o", "r", "n", "t", "v", "s", "c", "R", "E", "_", "\\.", ".",
      ".*", "[a-m]", "[^aeiou]", "(en|ing)", "e+", "re?",
  };
  std::uniform_int_distribution<std::size_t> piece(0, kPieces.size() - 1);
  std::uniform_int_distribution<int> length(1, 4);
  std::bernoulli_distribution coin(0.25);
  std::string p;
  if (coin(rng)) p += "(?i)";
  if (coin(rng)) p += "^";
  for (int n = length(rng); n > 0; --n) p += kPieces[piece(rng)];
  if (coin(rng)) p += "$";
  return p;
}

}  // namespace testing

#endif  // FRAMELEX_TESTS_SUPPORT_H_
