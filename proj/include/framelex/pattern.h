#ifndef FRAMELEX_PATTERN_H_
#define FRAMELEX_PATTERN_H_

#include <memory>
#include <string>
#include <string_view>

namespace framelex {

// A search pattern in Perl regular-expression syntax, applied as an
// unanchored search over a whole name. An inline (?i) makes it
// case-insensitive. Construction throws PatternError on bad syntax.
class Pattern {
 public:
  explicit Pattern(std::string_view source);
  ~Pattern();
  Pattern(Pattern&&) noexcept;
  Pattern& operator=(Pattern&&) noexcept;

  bool matches(std::string_view name) const;
  const std::string& source() const { return source_; }

 private:
  struct Impl;
  std::string source_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace framelex

#endif  // FRAMELEX_PATTERN_H_
