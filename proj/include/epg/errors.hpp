#ifndef EPG_ERRORS_HPP
#define EPG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace epg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested group exceeds the configured order cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Constructor parameters violate their documented preconditions.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (group spec, Cayley file, permutation).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but lies outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A multiplication table breaks one of the group laws. `law()` names it:
/// "closure", "latin-square", "identity" or "associativity".
class ValidationError : public Error {
 public:
  ValidationError(std::string law, const std::string& detail)
      : Error(law + ": " + detail), law_(std::move(law)) {}

  const std::string& law() const noexcept { return law_; }

 private:
  std::string law_;
};

}  // namespace epg

#endif  // EPG_ERRORS_HPP
