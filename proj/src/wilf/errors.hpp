#ifndef WILF_ERRORS_HPP
#define WILF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wilf {

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Text or document could not be parsed.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A scheme does not contain a class the evaluation needs, or fails validation.
class IntegrityError : public std::runtime_error {
public:
  explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wilf

#endif
