#ifndef PYTERNARY_RNG_HPP
#define PYTERNARY_RNG_HPP

#include <cstdint>
#include <string>

namespace pyternary {

// splitmix64: tiny deterministic generator, identical output on every
// platform.  Standard-library distributions are implementation-defined, so
// reports derived from these streams stay byte-identical only if we roll our
// own uniform draw.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi].  Modulo bias is negligible for the tiny
    // ranges used here and keeps the stream reproducible.
    int uniform_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next() % span);
    }

    // Uniform nonzero integer in [lo, hi] (requires lo <= 0 <= hi, lo < hi).
    int uniform_nonzero_int(int lo, int hi) {
        int v = uniform_int(lo, hi - 1);
        if (v >= 0) ++v;
        return v;
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t hash_string(const std::string& s) {
    // FNV-1a, 64 bit
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Independent stream for (master seed, case id, trial index).
inline std::uint64_t derive_seed(std::uint64_t master, const std::string& case_id,
                                 std::uint64_t trial) {
    Rng mix(master ^ hash_string(case_id));
    std::uint64_t base = mix.next();
    Rng mix2(base + 0x632be59bd9b4e019ULL * (trial + 1));
    return mix2.next();
}

} // namespace pyternary

#endif
