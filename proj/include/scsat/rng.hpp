#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace scsat {

/// SplitMix64: tiny, platform-independent generator used for all seeded
/// randomness so identical seeds give identical results everywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0,n) without modulo bias (rejection sampling).
    uint64_t next_below(uint64_t n) {
        uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

  private:
    uint64_t state_;
};

/// Derive an independent stream key from a seed and a stream index.
inline uint64_t stream_key(uint64_t seed, uint64_t stream) {
    SplitMix64 g(seed ^ (0x6a09e667f3bcc909ULL + stream * 0x9e3779b97f4a7c15ULL));
    g.next();
    return g.next();
}

/// Deterministic low-discrepancy sequence in [0,1)^dim (Kronecker sequence
/// with generalized golden-ratio increments), offset by a seeded shift.
class KroneckerSequence {
  public:
    KroneckerSequence(int dim, uint64_t seed) : inc_(static_cast<size_t>(dim)), pos_(static_cast<size_t>(dim)) {
        // gamma = 1/phi_d, phi_d the unique positive root of x^(d+1) = x + 1
        double phi = 2.0;
        for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / (dim + 1.0));
        SplitMix64 g(stream_key(seed, 0x4b726f6eULL));
        double a = 1.0 / phi;
        for (int j = 0; j < dim; ++j) {
            inc_[static_cast<size_t>(j)] = a;
            pos_[static_cast<size_t>(j)] = g.next_double();
            a /= phi;
        }
    }

    /// Advance and write the next point into out[0..dim).
    void next(std::vector<double> &out) {
        for (size_t j = 0; j < inc_.size(); ++j) {
            pos_[j] += inc_[j];
            if (pos_[j] >= 1.0) pos_[j] -= 1.0;
            out[j] = pos_[j];
        }
    }

  private:
    std::vector<double> inc_;
    std::vector<double> pos_;
};

/// Seeded Fisher-Yates permutation of {0,...,n-1}.
inline std::vector<uint32_t> random_permutation(uint32_t n, uint64_t key) {
    std::vector<uint32_t> p(n);
    for (uint32_t i = 0; i < n; ++i) p[i] = i;
    SplitMix64 g(key);
    for (uint32_t i = n; i > 1; --i) {
        uint32_t j = static_cast<uint32_t>(g.next_below(i));
        std::swap(p[i - 1], p[j]);
    }
    return p;
}

}  // namespace scsat
