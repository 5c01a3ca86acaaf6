#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace dali {

// Deterministic 64-bit generator (splitmix64). The standard library engines
// are portable but the distributions are not, so every sampled artifact goes
// through this class to stay byte-identical across platforms and compilers.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound), bound > 0. Rejection sampling.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; the cosine twin is cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 6.283185307179586476925287 * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        return r * std::cos(theta);
    }

    // Partial Fisher-Yates: the first `take` slots of a fresh index array
    // [0, n) are a uniform sample without replacement.
    std::vector<uint64_t> sample_indices(uint64_t n, uint64_t take) {
        std::vector<uint64_t> idx(n);
        for (uint64_t i = 0; i < n; ++i) idx[i] = i;
        if (take > n) take = n;
        for (uint64_t i = 0; i < take; ++i) {
            uint64_t j = i + below(n - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(take);
        return idx;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (uint64_t i = v.size(); i > 1; --i) {
            uint64_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    uint64_t state_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Named sub-stream of a root seed; stages draw from independent streams so
// they can be re-run in isolation and still reproduce the full pipeline.
inline uint64_t substream_seed(uint64_t root_seed, std::string_view name) {
    Rng mix(root_seed ^ fnv1a64(name));
    return mix.next();
}

}  // namespace dali
