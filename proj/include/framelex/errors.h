#ifndef FRAMELEX_ERRORS_H_
#define FRAMELEX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace framelex {

// Root of every exception the library throws on purpose.
class FramelexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A frame, LU, semantic type, document or relation type that does not exist
// was requested by name or ID.
class LookupFailure : public FramelexError {
 public:
  using FramelexError::FramelexError;
};

// Rejected search pattern syntax.
class PatternError : public FramelexError {
 public:
  using FramelexError::FramelexError;
};

// Anything wrong with the data on disk.
class DataError : public FramelexError {
 public:
  using FramelexError::FramelexError;
};

// The data directory or a required index file is missing.
class OpenError : public DataError {
 public:
  using DataError::DataError;
};

// Malformed XML or a required element/attribute is absent.
class ParseError : public DataError {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : DataError(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// Well-formed data that violates a model invariant (duplicate IDs, spans out
// of order, semantic type cycles, dangling references, ...).
class IntegrityError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace framelex

#endif  // FRAMELEX_ERRORS_H_
