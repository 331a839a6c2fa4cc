// Copyright 2026 The starbimod Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starbimod {

enum class ErrorKind {
  InvalidArgument,
  TagMismatch,
  NotHermitian,
  NotInBimodule,
  DimensionMismatch,
  MomentOutOfRange,
  NotPositive,
  SpecTagMismatch,
  UnsupportedVariant,
  MomentMismatch,
  NotHermitianElement,
  SingularGram,
  SyntaxError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TagMismatch: return "TagMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotInBimodule: return "NotInBimodule";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::MomentOutOfRange: return "MomentOutOfRange";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::SpecTagMismatch: return "SpecTagMismatch";
    case ErrorKind::UnsupportedVariant: return "UnsupportedVariant";
    case ErrorKind::MomentMismatch: return "MomentMismatch";
    case ErrorKind::NotHermitianElement: return "NotHermitianElement";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace starbimod
