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

#include "vc/manifest.h"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "vc/errors.h"
#include "vc/feature_io.h"

namespace vc {

using nlohmann::json;

const char* SplitTagName(SplitTag tag) {
  switch (tag) {
    case SplitTag::kTrain: return "train";
    case SplitTag::kAdapt: return "adapt";
    case SplitTag::kEval: return "eval";
  }
  return "?";
}

SplitTag ParseSplitTag(const std::string& name) {
  if (name == "train") return SplitTag::kTrain;
  if (name == "adapt") return SplitTag::kAdapt;
  if (name == "eval") return SplitTag::kEval;
  throw Error(ErrorCode::kParseError, "unknown split tag '" + name + "'");
}

std::vector<const UtteranceRecord*> CorpusManifest::Select(
    const std::string& speaker_id, std::optional<SplitTag> split) const {
  std::vector<const UtteranceRecord*> out;
  for (const auto& u : utterances) {
    if (!speaker_id.empty() && u.speaker_id != speaker_id) continue;
    if (split.has_value() && u.split != *split) continue;
    out.push_back(&u);
  }
  return out;
}

const UtteranceRecord* CorpusManifest::Find(
    const std::string& utterance_id) const {
  for (const auto& u : utterances) {
    if (u.utterance_id == utterance_id) return &u;
  }
  return nullptr;
}

CorpusManifest CorpusManifest::SpeakerSlice(
    const std::string& speaker_id, std::optional<SplitTag> split) const {
  CorpusManifest out;
  out.corpus_name = corpus_name;
  out.base_dir = base_dir;
  out.speakers = {speaker_id};
  for (const auto& u : utterances) {
    if (u.speaker_id != speaker_id) continue;
    if (split.has_value() && u.split != *split) continue;
    out.utterances.push_back(u);
  }
  return out;
}

CorpusManifest CorpusManifest::WithoutSpeakers(
    const std::vector<std::string>& exclude) const {
  CorpusManifest out;
  out.corpus_name = corpus_name;
  out.base_dir = base_dir;
  auto excluded = [&](const std::string& s) {
    return std::find(exclude.begin(), exclude.end(), s) != exclude.end();
  };
  for (const auto& s : speakers) {
    if (!excluded(s)) out.speakers.push_back(s);
  }
  for (const auto& u : utterances) {
    if (!excluded(u.speaker_id)) out.utterances.push_back(u);
  }
  return out;
}

namespace {

FeatureKind ExpectedKind(int slot) {
  switch (slot) {
    case 0: return FeatureKind::kPpg;
    case 1: return FeatureKind::kMcc;
    default: return FeatureKind::kLf0;
  }
}

}  // namespace

CorpusManifest LoadManifest(const std::filesystem::path& path,
                            const FormatOptions& opts) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::kMissingFile, path.string());
  }
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                path.string() + ": " + std::string(e.what()));
  }

  CorpusManifest m;
  m.base_dir = path.has_parent_path() ? path.parent_path()
                                      : std::filesystem::path(".");
  try {
    m.corpus_name = doc.at("corpus_name").get<std::string>();
    m.speakers = doc.at("speakers").get<std::vector<std::string>>();
    for (const auto& ju : doc.at("utterances")) {
      UtteranceRecord u;
      u.utterance_id = ju.at("id").get<std::string>();
      u.speaker_id = ju.at("speaker").get<std::string>();
      u.ppg_path = ju.at("ppg").get<std::string>();
      u.mcc_path = ju.at("mcc").get<std::string>();
      u.lf0_path = ju.at("lf0").get<std::string>();
      u.frame_count = ju.at("frames").get<int64_t>();
      u.split = ParseSplitTag(ju.at("split").get<std::string>());
      m.utterances.push_back(std::move(u));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError,
                path.string() + ": " + std::string(e.what()));
  }

  std::set<std::string> ids;
  std::set<std::string> speaker_set(m.speakers.begin(), m.speakers.end());
  for (const auto& u : m.utterances) {
    if (!ids.insert(u.utterance_id).second) {
      throw Error(ErrorCode::kParseError,
                  "duplicate utterance id '" + u.utterance_id + "'");
    }
    if (speaker_set.count(u.speaker_id) == 0) {
      throw Error(ErrorCode::kUnknownSpeaker,
                  "utterance '" + u.utterance_id + "' names speaker '" +
                      u.speaker_id + "' not in speaker list");
    }
  }

  // Cross-file validation: every referenced file must exist, parse, and agree
  // with the declared frame count.
  for (const auto& u : m.utterances) {
    const std::filesystem::path paths[3] = {
        m.Resolve(u.ppg_path), m.Resolve(u.mcc_path), m.Resolve(u.lf0_path)};
    for (int slot = 0; slot < 3; ++slot) {
      if (!std::filesystem::exists(paths[slot])) {
        throw Error(ErrorCode::kMissingFile, paths[slot].string() +
                                                 " (utterance '" +
                                                 u.utterance_id + "')");
      }
      const FeatureSequence seq = ReadFeatureFile(paths[slot], opts);
      if (seq.kind != ExpectedKind(slot)) {
        throw Error(ErrorCode::kParseError,
                    paths[slot].string() + ": expected kind " +
                        FeatureKindName(ExpectedKind(slot)) + ", file holds " +
                        FeatureKindName(seq.kind));
      }
      if (seq.NumFrames() != u.frame_count) {
        throw Error(ErrorCode::kFrameCountMismatch,
                    "utterance '" + u.utterance_id + "': manifest declares " +
                        std::to_string(u.frame_count) + " frames, " +
                        paths[slot].string() + " holds " +
                        std::to_string(seq.NumFrames()));
      }
    }
  }
  return m;
}

void SaveManifest(const CorpusManifest& manifest,
                  const std::filesystem::path& path) {
  json doc;
  doc["corpus_name"] = manifest.corpus_name;
  doc["speakers"] = manifest.speakers;
  json utts = json::array();
  for (const auto& u : manifest.utterances) {
    json ju;
    ju["id"] = u.utterance_id;
    ju["speaker"] = u.speaker_id;
    ju["ppg"] = u.ppg_path.generic_string();
    ju["mcc"] = u.mcc_path.generic_string();
    ju["lf0"] = u.lf0_path.generic_string();
    ju["frames"] = u.frame_count;
    ju["split"] = SplitTagName(u.split);
    utts.push_back(std::move(ju));
  }
  doc["utterances"] = std::move(utts);

  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  }
  out << doc.dump(2) << "\n";
  if (!out) {
    throw Error(ErrorCode::kIoFailure, "write failed for " + path.string());
  }
}

}  // namespace vc
