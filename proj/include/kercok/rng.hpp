#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace kercok {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the index-th independent stream derived from seed.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x5851f42d4c957f2dULL));
}

/// mt19937_64 (312 x 64-bit words of state) with portable integer sampling.
/// The standard distributions are implementation-defined, so bounded draws use
/// explicit rejection to keep streams identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        if (hi < lo)
            throw std::invalid_argument("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }

    bool chance(unsigned num, unsigned den) { return uniform(0, den - 1) < num; }

    template <class T>
    const T& pick(const std::vector<T>& items)
    {
        return items[index(items.size())];
    }

private:
    std::mt19937_64 engine_;
};

} // namespace kercok
