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

#ifndef VC_FEATURE_IO_H_
#define VC_FEATURE_IO_H_

#include <filesystem>

#include "vc/feature.h"

namespace vc {

// Binary feature file layout (little-endian):
//   bytes 0-3   magic "VCF1"
//   bytes 4-7   u32 frame count T
//   bytes 8-11  u32 dimension D
//   bytes 12-15 u32 kind code (0=PPG, 1=MCC, 2=LF0)
//   then        T*D float32 values, frame-major
// Writing is deterministic: identical sequences produce identical bytes.

FeatureSequence ReadFeatureFile(const std::filesystem::path& path,
                                const FormatOptions& opts = {});

void WriteFeatureFile(const FeatureSequence& seq,
                      const std::filesystem::path& path,
                      const FormatOptions& opts = {});

}  // namespace vc

#endif  // VC_FEATURE_IO_H_
