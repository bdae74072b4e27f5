#include "wordmaps/error.hpp"

namespace wordmaps {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::OrderLimitExceeded: return "OrderLimitExceeded";
    case Errc::VariableOutOfRange: return "VariableOutOfRange";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::TableCapExceeded: return "TableCapExceeded";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::NotDistinct: return "NotDistinct";
    case Errc::ClassOutOfSupportedRange: return "ClassOutOfSupportedRange";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace wordmaps
