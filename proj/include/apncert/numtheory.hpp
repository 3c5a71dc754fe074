#pragma once

// Integer helpers: primality, factorization of 64-bit words, and
// multiplicative orders. Used for primitive elements and roots of unity.

#include <cstdint>
#include <vector>

namespace apncert::nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order. Trial division by small
/// primes, then Pollard-Brent on whatever composite cofactor remains.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Least k >= 1 with 2^k = 1 (mod d). d must be odd; ord(1) = 1.
std::uint64_t order_of_two(std::uint64_t d);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace apncert::nt
