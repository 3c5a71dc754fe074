#include "apncert/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace apncert::nt {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) {
            return n == p;
        }
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n; the polynomial constant is stepped deterministically.
std::uint64_t pollard_brent(std::uint64_t n)
{
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, q = 1, g = 1, ys = 2;
        const std::uint64_t block = 128;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) {
                y = f(y);
            }
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const std::uint64_t g = pollard_brent(n);
    factor_into(g, out);
    factor_into(n / g, out);
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("prime_factors: n must be positive");
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t order_of_two(std::uint64_t d)
{
    if (d == 0 || d % 2 == 0) {
        throw std::invalid_argument("order_of_two: modulus must be odd and positive");
    }
    if (d == 1) {
        return 1;
    }
    // ord divides phi(d); with small d a direct walk is cheapest and exact.
    std::uint64_t k = 1;
    std::uint64_t x = 2 % d;
    while (x != 1) {
        x = static_cast<std::uint64_t>(static_cast<u128>(x) * 2 % d);
        ++k;
    }
    return k;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b)
{
    return a / std::gcd(a, b) * b;
}

}  // namespace apncert::nt
