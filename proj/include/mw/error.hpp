#pragma once

#include <stdexcept>
#include <string>

namespace mw {

enum class ErrorKind {
  NotPure,
  ContainedFacet,
  EmptyInput,
  NotAFace,
  NotAFacet,
  NotPseudomanifold,
  IllegalMove,
  BudgetZero,
  IncompatibleGluing,
  WrongDimension,
  NotASurface,
  CapExceeded,
  ParseError,
  IncompleteEmbedding,
  InvalidArgument,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::ContainedFacet: return "ContainedFacet";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::BudgetZero: return "BudgetZero";
    case ErrorKind::IncompatibleGluing: return "IncompatibleGluing";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotASurface: return "NotASurface";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IncompleteEmbedding: return "IncompleteEmbedding";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mw
