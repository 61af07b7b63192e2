#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symbisect {

enum class ErrorKind {
  DegenerateInput,
  NotConvex,
  NotCentrallySymmetric,
  InvalidParams,
  ParseError,
  ValidationError,
  NotStandard,
  Inconsistency,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NotStandard: return "NotStandard";
    case ErrorKind::Inconsistency: return "Inconsistency";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace symbisect
