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

#ifndef VC_FEATURE_H_
#define VC_FEATURE_H_

#include <Eigen/Dense>
#include <string>

namespace vc {

// Feature kinds stored in .vcf files. The numeric values are the on-disk
// kind codes and must not change.
enum class FeatureKind : uint32_t { kPpg = 0, kMcc = 1, kLf0 = 2 };

const char* FeatureKindName(FeatureKind kind);

// Sentinel marking unvoiced f0 frames. Defined as the float32 image of -1e10
// so the value survives the 32-bit file payload bit-exactly.
constexpr float kUnvoicedF32 = -1e10f;
constexpr double kUnvoiced = static_cast<double>(kUnvoicedF32);

inline bool IsVoiced(double v) { return v != kUnvoiced; }

// One utterance worth of frames for a single feature kind. Row = one frame.
// Values are held as doubles for numerics; the file payload is float32, so
// anything loaded from disk is exactly float32-representable.
struct FeatureSequence {
  FeatureKind kind = FeatureKind::kMcc;
  Eigen::MatrixXd frames;  // T x D
  double frame_shift_ms = 5.0;
  std::string utterance_id;

  int64_t NumFrames() const { return frames.rows(); }
  int64_t Dim() const { return frames.cols(); }
};

// Dimension checking applied when reading/writing feature files. Strict mode
// pins PPG/MCC dimensions to the configured values; the defaults are the
// standard 42-dim PPG / 40-dim MCC setup. Synthetic desk-scale corpora pass
// their own dims.
struct FormatOptions {
  bool strict_dims = true;
  int ppg_dim = 42;
  int mcc_dim = 40;
};

// Checks all kind-specific invariants (finiteness, PPG simplex rows, LF0
// single dim, strict dims). Throws Error on violation.
void ValidateFeatureSequence(const FeatureSequence& seq,
                             const FormatOptions& opts = {});

}  // namespace vc

#endif  // VC_FEATURE_H_
