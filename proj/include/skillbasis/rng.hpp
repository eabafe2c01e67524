#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "skillbasis/common.hpp"

namespace skillbasis {

// splitmix64, used to derive substream seeds from (root seed, label).
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seeded generator with hand-rolled transforms so that a fixed seed gives the
// same stream on every platform (std distributions are not portable).
// Substreams depend only on (seed, label), never on draw position, so stages
// can be reordered or parallelized without perturbing each other's draws.
class Rng {
 public:
  explicit Rng(uint64_t seed) : base_(splitmix64(seed)), gen_(base_) {}

  Rng substream(const std::string& name) const {
    return Rng(base_ ^ fnv1a(name));
  }
  Rng substream(uint64_t index) const {
    return Rng(base_ ^ splitmix64(index + 0x51ed2701ULL));
  }

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  int uniform_int(int n) { return static_cast<int>(uniform() * n) % n; }

  // Marsaglia polar method; caches the second deviate.
  double normal() {
    if (has_cache_) {
      has_cache_ = false;
      return cache_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    cache_ = v * f;
    has_cache_ = true;
    return u * f;
  }

  VectorXd normal_vector(int n) {
    VectorXd out(n);
    for (int i = 0; i < n; ++i) out[i] = normal();
    return out;
  }

  // Draw an index from a nonnegative weight vector (unnormalized is fine).
  int categorical(const Eigen::Ref<const VectorXd>& weights) {
    double total = weights.sum();
    double r = uniform() * total;
    double acc = 0.0;
    for (Eigen::Index i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (r < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size() - 1);
  }

 private:
  uint64_t base_;
  std::mt19937_64 gen_;
  double cache_ = 0.0;
  bool has_cache_ = false;
};

}  // namespace skillbasis
