#pragma once

#include <stdexcept>
#include <string>

namespace yfuse {

enum class ErrorKind {
  ShapeInvalid,
  BoundExceeded,
  PoleAt,
  NotRegular,
  Singular,
  SizeMismatch,
  DivisionByZero,
  MixedFactorKinds,
  IndexOutOfRange,
  DenominatorZero,
  EmptyHom,
  NoIntertwiner,
  DimensionMismatch,
  InvalidInput,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ShapeInvalid: return "ShapeInvalid";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::PoleAt: return "PoleAt";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MixedFactorKinds: return "MixedFactorKinds";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DenominatorZero: return "DenominatorZero";
    case ErrorKind::EmptyHom: return "EmptyHom";
    case ErrorKind::NoIntertwiner: return "NoIntertwiner";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace yfuse
