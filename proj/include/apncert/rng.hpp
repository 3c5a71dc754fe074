#pragma once

// Counter-based random streams. A value depends only on (seed, stream,
// index), so any partition of a scan over indices draws identical values.

#include <cstdint>

#include "apncert/gf2poly.hpp"

namespace apncert {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stream identifiers, so that e.g. alpha and beta draws never collide.
namespace streams {
inline constexpr std::uint64_t polynomial = 1;
inline constexpr std::uint64_t alpha = 2;
inline constexpr std::uint64_t beta = 3;
inline constexpr std::uint64_t scaling = 4;
inline constexpr std::uint64_t sample = 5;
}  // namespace streams

class CounterStream {
  public:
    CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : key_(splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL)))
    {
    }

    std::uint64_t operator()(std::uint64_t index, std::uint64_t attempt = 0) const noexcept
    {
        return splitmix64(key_ ^ splitmix64(index * 0x9E3779B97F4A7C15ULL + attempt));
    }

    Bits element(const Field& F, std::uint64_t index) const noexcept { return (*this)(index) & F.mask(); }

    Bits nonzero_element(const Field& F, std::uint64_t index) const noexcept
    {
        for (std::uint64_t attempt = 0;; ++attempt) {
            const Bits v = (*this)(index, attempt) & F.mask();
            if (v != 0) {
                return v;
            }
        }
    }

  private:
    std::uint64_t key_;
};

/// Degree-m polynomial with seeded coefficients; the leading coefficient
/// a_0 is nonzero, and so is a_1 when `nonzero_a1` is set.
UPoly random_poly(const FieldPtr& field, int m, std::uint64_t seed, bool nonzero_a1 = true,
                  std::uint64_t stream = streams::polynomial);

}  // namespace apncert
