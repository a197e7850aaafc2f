#include "framelex/pattern.h"

#include <boost/regex.hpp>

#include "framelex/errors.h"

namespace framelex {

struct Pattern::Impl {
  boost::regex re;
};

Pattern::Pattern(std::string_view source) : source_(source), impl_(std::make_unique<Impl>()) {
  try {
    impl_->re.assign(source_.begin(), source_.end(), boost::regex::perl);
  } catch (const boost::regex_error& e) {
    throw PatternError("invalid pattern '" + source_ + "': " + e.what());
  }
}

Pattern::~Pattern() = default;
Pattern::Pattern(Pattern&&) noexcept = default;
Pattern& Pattern::operator=(Pattern&&) noexcept = default;

bool Pattern::matches(std::string_view name) const {
  try {
    return boost::regex_search(name.begin(), name.end(), impl_->re);
  } catch (const std::runtime_error& e) {
    // Pathological patterns can exhaust the matcher's backtracking budget.
    throw PatternError("pattern '" + source_ + "' could not be evaluated: " + e.what());
  }
}

}  // namespace framelex
