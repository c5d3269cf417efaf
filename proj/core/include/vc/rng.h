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

#ifndef VC_RNG_H_
#define VC_RNG_H_

#include <cmath>
#include <cstdint>
#include <vector>

namespace vc {

// xoshiro256++ with explicitly coded samplers. Every draw is a pure function
// of the construction seed, which keeps corpora, model inits and training
// trajectories reproducible across runs and platforms (std:: distributions
// are implementation-defined and would break that).
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {
    uint64_t x = seed;
    for (int i = 0; i < 4; ++i) s_[i] = SplitMix64(&x);
  }

  // Child streams are derived from the construction seed, not the current
  // state, so the derivation is independent of draw order.
  Rng Child(uint64_t stream) const {
    uint64_t x = seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    return Rng(SplitMix64(&x));
  }

  uint64_t NextU64() {
    const uint64_t result = Rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = Rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double Uniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  // Uniform integer in [0, n).
  int64_t UniformInt(int64_t n) {
    return static_cast<int64_t>(NextU64() % static_cast<uint64_t>(n));
  }

  // Standard normal via Box-Muller; the spare value is cached.
  double Normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = Uniform();
    while (u1 <= 0.0) u1 = Uniform();
    const double u2 = Uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

  // Gamma(shape, 1) via Marsaglia-Tsang, with the boost trick for shape < 1.
  double Gamma(double shape) {
    if (shape < 1.0) {
      const double u = Uniform();
      return Gamma(shape + 1.0) * std::pow(u > 0 ? u : 1e-300, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = Normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = Uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Symmetric Dirichlet over `dim` coordinates.
  std::vector<double> Dirichlet(int dim, double concentration) {
    std::vector<double> g(dim);
    double sum = 0.0;
    for (int i = 0; i < dim; ++i) {
      g[i] = Gamma(concentration);
      sum += g[i];
    }
    if (sum < 1e-300) {
      for (int i = 0; i < dim; ++i) g[i] = 1.0 / dim;
      return g;
    }
    for (int i = 0; i < dim; ++i) g[i] /= sum;
    return g;
  }

  template <typename T>
  void Shuffle(std::vector<T>* v) {
    for (int64_t i = static_cast<int64_t>(v->size()) - 1; i > 0; --i) {
      std::swap((*v)[i], (*v)[UniformInt(i + 1)]);
    }
  }

 private:
  static uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t SplitMix64(uint64_t* x) {
    uint64_t z = (*x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t seed_;
  uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace vc

#endif  // VC_RNG_H_
