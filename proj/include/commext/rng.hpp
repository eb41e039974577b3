#ifndef COMMEXT_RNG_HPP
#define COMMEXT_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace commext {

// Seeded source of bounded integers. std::uniform_int_distribution is
// implementation-defined, so bounded draws use rejection on the raw
// mt19937_64 stream to keep instances identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (lo > hi)
            throw std::invalid_argument("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace commext

#endif // COMMEXT_RNG_HPP
