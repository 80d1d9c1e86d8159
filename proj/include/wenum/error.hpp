// Copyright 2026 The wenum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WENUM_ERROR_HPP
#define WENUM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wenum {

enum class Errc {
  LengthMismatch,
  ZeroArity,
  ArityMismatch,
  ArityTooLarge,
  BadThreshold,
  EmptyBase,
  ArityBudget,
  SyntaxError,
  UnknownConnective,
  UnboundVariable,
  BaseMismatch,
  NotBinary,
  NotSeparating,
  NotAffine,
  NotMonotone,
  NotSelfDual,
  NotDeg2,
  Overflow,
  TooLarge,
  RuleViolation,
  EKRViolation,
  Intractable,
  OpenCase,
  SizeGuard,
  RepresentationMissing,
  PaddingInfeasible,
  MissingEntry,
  InvalidCnf,
  InvalidArgument,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ZeroArity: return "ZeroArity";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ArityTooLarge: return "ArityTooLarge";
    case Errc::BadThreshold: return "BadThreshold";
    case Errc::EmptyBase: return "EmptyBase";
    case Errc::ArityBudget: return "ArityBudget";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownConnective: return "UnknownConnective";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotBinary: return "NotBinary";
    case Errc::NotSeparating: return "NotSeparating";
    case Errc::NotAffine: return "NotAffine";
    case Errc::NotMonotone: return "NotMonotone";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::NotDeg2: return "NotDeg2";
    case Errc::Overflow: return "Overflow";
    case Errc::TooLarge: return "TooLarge";
    case Errc::RuleViolation: return "RuleViolation";
    case Errc::EKRViolation: return "EKRViolation";
    case Errc::Intractable: return "Intractable";
    case Errc::OpenCase: return "OpenCase";
    case Errc::SizeGuard: return "SizeGuard";
    case Errc::RepresentationMissing: return "RepresentationMissing";
    case Errc::PaddingInfeasible: return "PaddingInfeasible";
    case Errc::MissingEntry: return "MissingEntry";
    case Errc::InvalidCnf: return "InvalidCnf";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wenum

#endif  // WENUM_ERROR_HPP
