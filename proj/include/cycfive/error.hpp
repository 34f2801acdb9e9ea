// Copyright 2026 The cycfive Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycfive {

enum class ErrorCode {
  MalformedInput,
  DegreeViolation,
  EmptyOrFullSet,
  Disconnected,
  NotCubic,
  NotMinimumCut,
  PreconditionViolated,
  InvariantViolation,
  NotAValidPart,
  NotAPermutation,
  IsFiveCycle,
  InternalContradiction,
  DistributionViolated,
  RepairFailed,
  TooLarge,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::EmptyOrFullSet: return "EmptyOrFullSet";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotMinimumCut: return "NotMinimumCut";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotAValidPart: return "NotAValidPart";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::IsFiveCycle: return "IsFiveCycle";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::DistributionViolated: return "DistributionViolated";
    case ErrorCode::RepairFailed: return "RepairFailed";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message names the violated clause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cycfive
