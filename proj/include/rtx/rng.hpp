#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace rtx {

// FNV-1a, used for named RNG streams and instruction hashing.
inline uint64_t fnv1a64(std::string_view s, uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline uint64_t hash_combine64(uint64_t a, uint64_t b) {
  // splitmix64 finalizer over the xor; good enough for stream splitting
  uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic RNG. All distributions are implemented on top of the raw
// mt19937_64 output stream (std:: distributions are not portable across
// standard library implementations).
class Rng {
public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // uniform in [0,1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0,n)
  int64_t randint(int64_t n) {
    if (n <= 0) return 0;
    return static_cast<int64_t>(uniform() * static_cast<double>(n)) % n;
  }

  double normal(double mu = 0.0, double sigma = 1.0) {
    if (has_spare_) {
      has_spare_ = false;
      return mu + sigma * spare_;
    }
    const double two_pi = 6.283185307179586;
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(two_pi * u2);
    has_spare_ = true;
    return mu + sigma * r * std::cos(two_pi * u2);
  }

  bool bernoulli(double p) { return uniform() < p; }

  template <typename V>
  void shuffle(V& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(randint(static_cast<int64_t>(i)));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Named-stream splitter: every subsystem derives its generator from the root
// seed plus a stream name, so adding draws to one subsystem never perturbs
// another.
class SeedTree {
public:
  explicit SeedTree(uint64_t root) : root_(root) {}

  uint64_t derive(std::string_view name) const {
    return hash_combine64(root_, fnv1a64(name));
  }

  uint64_t derive(std::string_view name, uint64_t index) const {
    return hash_combine64(derive(name), index);
  }

  Rng stream(std::string_view name) const { return Rng(derive(name)); }
  Rng stream(std::string_view name, uint64_t index) const {
    return Rng(derive(name, index));
  }

  uint64_t root() const { return root_; }

private:
  uint64_t root_;
};

} // namespace rtx
