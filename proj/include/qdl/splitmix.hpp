#ifndef QDL_SPLITMIX_HPP
#define QDL_SPLITMIX_HPP

#include <cstdint>

namespace qdl {

/// SplitMix64 generator.  Same seed, same stream, on every platform; the
/// seeded polynomial generators rely on this for reproducible test vectors.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [lo, hi] by reduction.  The tiny modulo bias is
    /// irrelevant here; cross-platform determinism is what matters.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next() % span);
    }

    /// Nonzero draw in [-bound, bound].
    std::int64_t next_nonzero(std::int64_t bound) {
        for (;;) {
            std::int64_t v = next_in(-bound, bound);
            if (v != 0) return v;
        }
    }

  private:
    std::uint64_t state_;
};

} // namespace qdl

#endif
