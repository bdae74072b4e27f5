#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wordmaps {

enum class Errc {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  OrderLimitExceeded,
  VariableOutOfRange,
  ExponentOverflow,
  TableCapExceeded,
  EnumerationCapExceeded,
  NotDistinct,
  ClassOutOfSupportedRange,
  NotAbelian,
  NotNilpotent,
  ParseError,
  InvalidArgument,
  InternalInvariant,
};

std::string_view to_string(Errc code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `what()` names the offending witness where there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wordmaps
