#ifndef STAIRCASE_RNG_HPP
#define STAIRCASE_RNG_HPP

#include <cstdint>
#include <random>

namespace staircase {

/// Seeded 64-bit Mersenne twister that counts its draws. Same seed, same
/// stream; never share one between threads.
class RngState {
public:
    explicit RngState(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return position_; }

    /// Uniform integer in [0, 2^53).
    std::uint64_t next_bits53()
    {
        ++position_;
        return engine_() >> 11;
    }

    /// next_bits53() / 2^53, exactly representable.
    double uniform() { return static_cast<double>(next_bits53()) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t position_ = 0;
};

/// splitmix64 finaliser over (master, index): per-sample seeds that do not
/// depend on how samples are spread across threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace staircase

#endif  // STAIRCASE_RNG_HPP
