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

#ifndef VC_MANIFEST_H_
#define VC_MANIFEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vc/feature.h"

namespace vc {

enum class SplitTag { kTrain, kAdapt, kEval };

const char* SplitTagName(SplitTag tag);
SplitTag ParseSplitTag(const std::string& name);

// One utterance: a (PPG, MCC, LF0) file triple plus bookkeeping. Paths are
// stored relative to the manifest directory.
struct UtteranceRecord {
  std::string utterance_id;
  std::string speaker_id;
  std::filesystem::path ppg_path;
  std::filesystem::path mcc_path;
  std::filesystem::path lf0_path;
  int64_t frame_count = 0;
  SplitTag split = SplitTag::kTrain;
};

struct CorpusManifest {
  std::string corpus_name;
  std::vector<std::string> speakers;
  std::vector<UtteranceRecord> utterances;
  // Directory the relative paths resolve against; set on load, not serialized.
  std::filesystem::path base_dir;

  std::filesystem::path Resolve(const std::filesystem::path& p) const {
    return p.is_absolute() ? p : base_dir / p;
  }

  std::vector<const UtteranceRecord*> Select(
      const std::string& speaker_id = "",
      std::optional<SplitTag> split = std::nullopt) const;

  const UtteranceRecord* Find(const std::string& utterance_id) const;

  // Sub-manifest restricted to one speaker (optionally one split).
  CorpusManifest SpeakerSlice(const std::string& speaker_id,
                              std::optional<SplitTag> split = std::nullopt) const;

  // Sub-manifest with the given speakers removed (all splits kept).
  CorpusManifest WithoutSpeakers(const std::vector<std::string>& exclude) const;
};

// Loads and eagerly validates a manifest: JSON schema, unique utterance ids,
// known speakers, referenced files exist and parse, frame counts agree.
// Never mutates files on disk.
CorpusManifest LoadManifest(const std::filesystem::path& path,
                            const FormatOptions& opts = {});

// Writes the manifest JSON document. Deterministic bytes for equal content.
void SaveManifest(const CorpusManifest& manifest,
                  const std::filesystem::path& path);

}  // namespace vc

#endif  // VC_MANIFEST_H_
