// Copyright 2026 The WLC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WLC_ERROR_H_
#define WLC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wlc {

enum class ErrorCode {
  kOverflow,
  kNonUnitDeterminant,
  kUnsupportedModulus,
  kInvalidPoint,
  kNotPositiveDefinite,
  kNotInUpperHalfPlane,
  kTruncationRadiusOverflow,
  kRealnessViolation,
  kInvalidCharacteristic,
  kSingularDenominator,
  kNotSymplectic,
  kBudgetExhausted,
  kBasePointVanishing,
  kNoTupleFound,
  kOutOfDomain,
  kParameterPole,
  kParse,
  kUnknownName,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kNonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorCode::kUnsupportedModulus: return "UnsupportedModulus";
    case ErrorCode::kInvalidPoint: return "InvalidPoint";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kNotInUpperHalfPlane: return "NotInUpperHalfPlane";
    case ErrorCode::kTruncationRadiusOverflow: return "TruncationRadiusOverflow";
    case ErrorCode::kRealnessViolation: return "RealnessViolation";
    case ErrorCode::kInvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorCode::kSingularDenominator: return "SingularDenominator";
    case ErrorCode::kNotSymplectic: return "NotSymplectic";
    case ErrorCode::kBudgetExhausted: return "BudgetExhausted";
    case ErrorCode::kBasePointVanishing: return "BasePointVanishing";
    case ErrorCode::kNoTupleFound: return "NoTupleFound";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kParameterPole: return "ParameterPole";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUnknownName: return "UnknownName";
  }
  return "Error";
}

}  // namespace wlc

#endif  // WLC_ERROR_H_
