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

#include "vc/feature_io.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "vc/errors.h"

static_assert(std::endian::native == std::endian::little,
              "feature files are little-endian; big-endian hosts unsupported");

namespace vc {

namespace {

constexpr char kMagic[4] = {'V', 'C', 'F', '1'};
constexpr double kPpgRowSumTol = 1e-4;

void AppendU32(std::vector<uint8_t>* buf, uint32_t v) {
  const uint8_t* p = reinterpret_cast<const uint8_t*>(&v);
  buf->insert(buf->end(), p, p + 4);
}

uint32_t ReadU32(const uint8_t* p) {
  uint32_t v;
  std::memcpy(&v, p, 4);
  return v;
}

}  // namespace

const char* FeatureKindName(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kPpg: return "PPG";
    case FeatureKind::kMcc: return "MCC";
    case FeatureKind::kLf0: return "LF0";
  }
  return "?";
}

void ValidateFeatureSequence(const FeatureSequence& seq,
                             const FormatOptions& opts) {
  const int64_t t = seq.NumFrames();
  const int64_t d = seq.Dim();
  if (t < 1 || d < 1) {
    throw Error(ErrorCode::kInvariantViolation,
                "feature sequence must have T >= 1 and D >= 1, got T=" +
                    std::to_string(t) + " D=" + std::to_string(d));
  }
  if (!seq.frames.allFinite()) {
    throw Error(ErrorCode::kNonFiniteValue,
                "non-finite value in " +
                    std::string(FeatureKindName(seq.kind)) + " sequence '" +
                    seq.utterance_id + "'");
  }
  switch (seq.kind) {
    case FeatureKind::kPpg: {
      if (opts.strict_dims && d != opts.ppg_dim) {
        throw Error(ErrorCode::kDimMismatch,
                    "PPG dim " + std::to_string(d) + " != expected " +
                        std::to_string(opts.ppg_dim));
      }
      for (int64_t i = 0; i < t; ++i) {
        if (seq.frames.row(i).minCoeff() < 0.0) {
          throw Error(ErrorCode::kInvariantViolation,
                      "PPG row " + std::to_string(i) + " has negative entry");
        }
        const double sum = seq.frames.row(i).sum();
        if (std::abs(sum - 1.0) > kPpgRowSumTol) {
          throw Error(ErrorCode::kInvariantViolation,
                      "PPG row " + std::to_string(i) + " sums to " +
                          std::to_string(sum) + ", expected 1 +/- 1e-4");
        }
      }
      break;
    }
    case FeatureKind::kMcc: {
      if (opts.strict_dims && d != opts.mcc_dim) {
        throw Error(ErrorCode::kDimMismatch,
                    "MCC dim " + std::to_string(d) + " != expected " +
                        std::to_string(opts.mcc_dim));
      }
      break;
    }
    case FeatureKind::kLf0: {
      if (d != 1) {
        throw Error(ErrorCode::kDimMismatch,
                    "LF0 dim must be 1, got " + std::to_string(d));
      }
      break;
    }
  }
}

FeatureSequence ReadFeatureFile(const std::filesystem::path& path,
                                const FormatOptions& opts) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kMissingFile, path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  }
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw Error(ErrorCode::kBadMagic, path.string());
  }
  if (bytes.size() < 16) {
    throw Error(ErrorCode::kTruncatedPayload,
                path.string() + ": header incomplete");
  }
  const uint32_t t = ReadU32(bytes.data() + 4);
  const uint32_t d = ReadU32(bytes.data() + 8);
  const uint32_t kind_code = ReadU32(bytes.data() + 12);
  if (kind_code > 2) {
    throw Error(ErrorCode::kParseError,
                path.string() + ": unknown kind code " +
                    std::to_string(kind_code));
  }
  const uint64_t expected = 16ull + 4ull * t * d;
  if (bytes.size() != expected) {
    throw Error(ErrorCode::kTruncatedPayload,
                path.string() + ": payload size " +
                    std::to_string(bytes.size() - 16) + " != expected " +
                    std::to_string(expected - 16));
  }

  FeatureSequence seq;
  seq.kind = static_cast<FeatureKind>(kind_code);
  seq.frames.resize(t, d);
  const uint8_t* p = bytes.data() + 16;
  for (uint32_t i = 0; i < t; ++i) {
    for (uint32_t j = 0; j < d; ++j) {
      float v;
      std::memcpy(&v, p, 4);
      p += 4;
      seq.frames(i, j) = static_cast<double>(v);
    }
  }
  seq.utterance_id = path.stem().string();
  ValidateFeatureSequence(seq, opts);
  return seq;
}

void WriteFeatureFile(const FeatureSequence& seq,
                      const std::filesystem::path& path,
                      const FormatOptions& opts) {
  ValidateFeatureSequence(seq, opts);
  const uint32_t t = static_cast<uint32_t>(seq.NumFrames());
  const uint32_t d = static_cast<uint32_t>(seq.Dim());

  std::vector<uint8_t> bytes;
  bytes.reserve(16 + 4ull * t * d);
  bytes.insert(bytes.end(), kMagic, kMagic + 4);
  AppendU32(&bytes, t);
  AppendU32(&bytes, d);
  AppendU32(&bytes, static_cast<uint32_t>(seq.kind));
  for (uint32_t i = 0; i < t; ++i) {
    for (uint32_t j = 0; j < d; ++j) {
      const float v = static_cast<float>(seq.frames(i, j));
      const uint8_t* p = reinterpret_cast<const uint8_t*>(&v);
      bytes.insert(bytes.end(), p, p + 4);
    }
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "write failed for " + path.string());
  }
}

}  // namespace vc
