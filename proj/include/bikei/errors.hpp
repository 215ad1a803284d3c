#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bikei {

// Malformed or invalid input (bad files, bad tables, bad parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure on one of the text grammars; carries the 0-based character
// offset and the offending token.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::string token, std::size_t position)
      : InputError(what + " at position " + std::to_string(position) +
                   " (token '" + token + "')"),
        token_(std::move(token)),
        position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

// A well-formed request that is not meaningful, e.g. counting an unoriented
// diagram with a non-involutory target.
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation refused because it would exceed a configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bikei
