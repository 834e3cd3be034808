#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace agree {

enum class ErrorKind {
  MarkNotInEdge,
  DuplicateBoundary,
  DuplicateEdge,
  BadArity,
  BadParity,
  WrongVariant,
  WrongArity,
  OrderNotOverSubset,
  ColoringSpaceTooLarge,
  BudgetExceeded,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for every contract violation in the library; the
// kind is what callers and tests dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace agree
