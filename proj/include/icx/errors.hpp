#ifndef ICX_ERRORS_HPP
#define ICX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace icx {

// Malformed input text (JSON syntax, wrong shapes, wrong types).
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates an instance/code invariant.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact search refused to run because the instance exceeds its cap.
// Never silently truncated: callers either propagate or report the reason.
class cap_exceeded : public std::runtime_error {
  public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace icx

#endif
