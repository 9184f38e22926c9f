#pragma once

#include <stdexcept>
#include <string>

namespace jacnewton {

enum class Errc {
  syntax,             // malformed textual input
  invalid_input,      // well-formed but outside an operation's domain
  zero_polynomial,
  not_squarefree,
  not_transverse,     // leading y-coefficient not constant
  normalization_failed,
  not_convenient,
  too_few_terms,
  not_plane_branch,   // Bresinsky failure
  criterion_failed,
  duplicate_roots,
  truncation_limited,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(Errc::syntax, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace jacnewton
