#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hypertile {

/// Seeded generator whose output is identical on every platform.
///
/// std::mt19937_64 is fully specified by the standard; the std
/// distributions are not, so conversions to doubles and bounded integers
/// are done here.
class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    /// Uniform in [0, bound), bound > 0; Lemire-style rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = engine_();
            if (r >= threshold)
                return r % bound;
        }
    }

    template <typename T>
    void shuffle(std::vector<T> &xs)
    {
        for (std::size_t i = xs.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(xs[i - 1], xs[j]);
        }
    }

    /// k distinct elements of `pool`, uniformly, in sorted order of position.
    template <typename T>
    std::vector<T> sample(const std::vector<T> &pool, std::size_t k)
    {
        std::vector<T> copy = pool;
        for (std::size_t i = 0; i < k && i < copy.size(); ++i) {
            const auto j = i + static_cast<std::size_t>(below(copy.size() - i));
            std::swap(copy[i], copy[j]);
        }
        copy.resize(std::min(k, copy.size()));
        return copy;
    }

    /// Derives an independent stream seed for task `index`.
    static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index)
    {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hypertile
