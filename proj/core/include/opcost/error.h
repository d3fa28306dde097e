// Copyright 2026 The opcost Authors
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

#ifndef OPCOST_ERROR_H_
#define OPCOST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace opcost {

enum class ErrorCode {
  kInvalidInput,
  kDegenerateInput,
  kSingular,
  kInfeasible,
  kUnbounded,
  kTooLarge,
  kUnsupported,
  kParse,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library is an Error carrying one of the codes
// above; callers that need to branch on the failure kind inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

inline void Require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) Fail(code, message);
}

}  // namespace opcost

#endif  // OPCOST_ERROR_H_
