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

#ifndef VC_SYNTHETIC_H_
#define VC_SYNTHETIC_H_

#include <filesystem>

#include "vc/manifest.h"

namespace vc {

// Configuration of the synthetic multi-speaker corpus generator.
//
// The generative model: per frame a content latent c_t is drawn on the PPG
// simplex (symmetric Dirichlet, concentration 0.5). Speaker s owns a fixed
// random affine map (A_s, b_s); MCC frames are A_s * c_t + b_s + Gaussian
// noise. LF0 frames are drawn per speaker from a Gaussian whose mean/std are
// sampled once from the configured ranges; a fixed fraction of frames is
// unvoiced. Eval-split utterances share content latents across speakers, so
// every speaker renders an exact parallel of each eval utterance.
struct SynthesisConfig {
  int n_speakers = 6;
  int utterances_per_speaker = 40;
  int min_frames = 100;
  int max_frames = 200;
  int ppg_dim = 16;
  int mcc_dim = 20;
  double speaker_map_scale = 1.0;
  double noise_std = 0.05;
  double lf0_mean_low = 4.6;   // log-Hz
  double lf0_mean_high = 5.6;
  double lf0_std_low = 0.1;
  double lf0_std_high = 0.3;
  uint64_t seed = 7;

  void Validate() const;  // throws InvalidConfig

  FormatOptions Format() const {
    return FormatOptions{true, ppg_dim, mcc_dim};
  }
};

// Generates the corpus under out_dir (feature files in feats/, manifest.json
// at the top). Deterministic: identical config yields byte-identical output.
// Splits per speaker follow adapt = min(50, U/2), eval = min(20, max(1, U/5)),
// remainder train.
CorpusManifest GenerateCorpus(const SynthesisConfig& config,
                              const std::filesystem::path& out_dir);

// Ratio of mean inter-speaker to mean intra-speaker distance between
// per-utterance mean MCC vectors. > 1 means speakers are geometrically
// separable; acceptance corpora must exceed 2.
double SpeakerSeparationScore(const CorpusManifest& manifest,
                              const FormatOptions& opts = {});

}  // namespace vc

#endif  // VC_SYNTHETIC_H_
