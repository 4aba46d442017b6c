// Copyright 2026 The sextic-index Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sextic/error.hpp"

namespace sextic {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ReducibleInput: return "ReducibleInput";
    case ErrorKind::NonMonicModulus: return "NonMonicModulus";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::InvalidSide: return "InvalidSide";
    case ErrorKind::IrrelevantModulus: return "IrrelevantModulus";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::OutsidePaperScope: return "OutsidePaperScope";
    case ErrorKind::Undetermined: return "Undetermined";
    case ErrorKind::FragmentMiss: return "FragmentMiss";
    case ErrorKind::IndeterminateCondition: return "IndeterminateCondition";
    case ErrorKind::PaperContradiction: return "PaperContradiction";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sextic
