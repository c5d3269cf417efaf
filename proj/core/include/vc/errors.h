// Copyright (c) 2026 The vcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VC_ERRORS_H_
#define VC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace vc {

enum class ErrorCode {
  kBadMagic,
  kDimMismatch,
  kTruncatedPayload,
  kNonFiniteValue,
  kInvariantViolation,
  kIoFailure,
  kParseError,
  kMissingFile,
  kFrameCountMismatch,
  kUnknownSpeaker,
  kInvalidConfig,
  kDegenerateCorpus,
  kSequenceTooShort,
  kMissingEmbedder,
  kMissingEmbedding,
  kUnexpectedEmbedding,
  kShapeMismatch,
  kNegativeLossInput,
  kNonFiniteLoss,
  kWrongStage,
  kMultipleSpeakers,
  kInsufficientVoicedFrames,
  kMissingReference,
  kEmptyOverlap,
};

const char* ErrorCodeName(ErrorCode code);

// All failures surface as a typed Error; the code names the contract that was
// broken and the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vc

#endif  // VC_ERRORS_H_
