#pragma once

#include <cstdint>
#include <random>

namespace poissinr {

/// Random stream used throughout the library. Every stochastic operation takes
/// one explicitly so that callers control seeding and threading.
using RandomStream = std::mt19937_64;

/// Purpose tags for sub-streams. Layout and shadowing draws live on separate
/// streams so toggling shadowing leaves the base-station layouts untouched.
enum class StreamPurpose : std::uint64_t {
    ue_grid = 1,
    layout = 2,
    shadowing = 3,
};

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace detail

/// Seed for the child stream (master, index, purpose). Pure function of its
/// arguments, so any worker can rebuild any run's streams independently.
constexpr std::uint64_t child_seed(std::uint64_t master, std::uint64_t index,
                                   StreamPurpose purpose) noexcept
{
    std::uint64_t h = detail::splitmix64(master);
    h = detail::splitmix64(h ^ index);
    return detail::splitmix64(h ^ static_cast<std::uint64_t>(purpose));
}

inline RandomStream child_stream(std::uint64_t master, std::uint64_t index,
                                 StreamPurpose purpose)
{
    return RandomStream{child_seed(master, index, purpose)};
}

}  // namespace poissinr
