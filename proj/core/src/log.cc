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

#include "vc/log.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "vc/errors.h"

namespace vc {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kFrameCountMismatch: return "FrameCountMismatch";
    case ErrorCode::kUnknownSpeaker: return "UnknownSpeaker";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kDegenerateCorpus: return "DegenerateCorpus";
    case ErrorCode::kSequenceTooShort: return "SequenceTooShort";
    case ErrorCode::kMissingEmbedder: return "MissingEmbedder";
    case ErrorCode::kMissingEmbedding: return "MissingEmbedding";
    case ErrorCode::kUnexpectedEmbedding: return "UnexpectedEmbedding";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNegativeLossInput: return "NegativeLossInput";
    case ErrorCode::kNonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::kWrongStage: return "WrongStage";
    case ErrorCode::kMultipleSpeakers: return "MultipleSpeakers";
    case ErrorCode::kInsufficientVoicedFrames: return "InsufficientVoicedFrames";
    case ErrorCode::kMissingReference: return "MissingReference";
    case ErrorCode::kEmptyOverlap: return "EmptyOverlap";
  }
  return "UnknownError";
}

namespace {

LogLevel ParseLevelFromEnv() {
  const char* env = std::getenv("VCC_LOG_LEVEL");
  if (env == nullptr) return LogLevel::kInfo;
  if (std::strcmp(env, "error") == 0) return LogLevel::kError;
  if (std::strcmp(env, "warn") == 0) return LogLevel::kWarn;
  if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
  if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
  return LogLevel::kInfo;
}

LogLevel& MutableLevel() {
  static LogLevel level = ParseLevelFromEnv();
  return level;
}

const char* LevelTag(LogLevel level) {
  switch (level) {
    case LogLevel::kError: return "error";
    case LogLevel::kWarn: return "warn";
    case LogLevel::kInfo: return "info";
    case LogLevel::kDebug: return "debug";
  }
  return "info";
}

}  // namespace

LogLevel ActiveLogLevel() { return MutableLevel(); }

void SetLogLevel(LogLevel level) { MutableLevel() = level; }

Log::~Log() {
  if (static_cast<int>(level_) > static_cast<int>(ActiveLogLevel())) return;
  std::fprintf(stderr, "[%s] %s\n", LevelTag(level_), stream_.str().c_str());
}

}  // namespace vc
