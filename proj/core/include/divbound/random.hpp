#pragma once

#include <cstdint>

namespace divbound {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based stream: the k-th draw is a pure function of (seed, stream, k),
/// so draws can be split across threads or trials without coordination and
/// reproduce bit for bit on every platform.
class CounterStream {
public:
    constexpr CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(mix64(seed ^ mix64(stream ^ 0x5851f42d4c957f2dULL))) {}

    constexpr std::uint64_t at(std::uint64_t counter) const noexcept {
        return mix64(key_ ^ mix64(counter));
    }

    constexpr std::uint64_t next() noexcept { return at(counter_++); }

    /// Uniform on the open interval (0, 1), 53 bits of resolution.
    constexpr double uniform() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Seed for the i-th independent sub-task of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace divbound
