#include "apncert/bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace apncert {

namespace {

BigInt pow2(std::uint64_t k)
{
    BigInt v = 1;
    v <<= static_cast<unsigned>(k);
    return v;
}

BigInt factorial(std::uint64_t d)
{
    BigInt v = 1;
    for (std::uint64_t i = 2; i <= d; ++i) {
        v *= i;
    }
    return v;
}

const DegreeProfile& require_admissible(const DegreeProfile& p)
{
    if (!p.admissible) {
        throw std::invalid_argument("degree " + std::to_string(p.m) + " is not admissible (need m = 2^r(2^l+1), r >= 2, l >= 1, gcd(r,l) <= 2)");
    }
    return p;
}

// Search limit for the threshold scans; both inequalities become true once
// 2^{n/2} dominates the constants, far below this.
constexpr std::uint64_t kScanLimit = 1u << 20;

}  // namespace

DegreeProfile degree_profile(std::uint64_t m)
{
    if (m < 4 || m % 2 != 0) {
        throw std::invalid_argument("degree_profile: m must be even and >= 4, got " + std::to_string(m));
    }
    DegreeProfile p;
    p.m = m;
    p.r = std::countr_zero(m);
    const std::uint64_t rest = m >> p.r;
    p.d = (m - 2) / 2;
    if (p.d % 2 == 1) {
        const std::uint64_t k = (p.d - 1) / 2;
        p.e = k * (k - 1) / 2;
    }
    if (rest > 1 && std::has_single_bit(rest - 1)) {
        p.shape_ok = true;
        p.ell = std::countr_zero(rest - 1);
        p.gcd_r_ell = std::gcd(static_cast<std::uint64_t>(p.r), static_cast<std::uint64_t>(p.ell));
        p.admissible = p.r >= 2 && p.ell >= 1 && p.gcd_r_ell <= 2;
    }
    return p;
}

std::vector<DegreeProfile> admissible_degrees(std::uint64_t limit)
{
    std::vector<DegreeProfile> out;
    for (int r = 2; r < 63; ++r) {
        for (int ell = 1; ell < 62; ++ell) {
            const unsigned __int128 m = (static_cast<unsigned __int128>(1) << r) *
                                        ((static_cast<unsigned __int128>(1) << ell) + 1);
            if (m > limit) {
                break;
            }
            if (std::gcd(r, ell) <= 2) {
                out.push_back(degree_profile(static_cast<std::uint64_t>(m)));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.m < b.m; });
    return out;
}

BigInt degenerate_alpha_bound(std::uint64_t m)
{
    return BigInt(m - 1) * BigInt(m - 4);
}

BigInt repeated_value_alpha_bound(const DegreeProfile& p)
{
    return (BigInt(5) * p.d + 4) * BigInt(p.e);
}

BigInt d_omega(std::uint64_t d)
{
    return factorial(d) * pow2(d - 1);
}

BigInt g_omega_bound(std::uint64_t d)
{
    return factorial(d) * pow2(d - 2) * BigInt(2 * d - 3) + 1;
}

bool n1_inequality_holds(const DegreeProfile& p, std::uint64_t n)
{
    const BigInt k = degenerate_alpha_bound(p.m) + repeated_value_alpha_bound(p);
    const BigInt a = pow2(n) - 1 - 2 * k;
    if (a <= 0) {
        return false;
    }
    // a > 2 * 2^{n/2}  <=>  a^2 > 4 * 2^n
    return a * a > 4 * pow2(n);
}

bool n2_inequality_holds(const DegreeProfile& p, std::uint64_t n)
{
    const BigInt g = g_omega_bound(p.d);
    const BigInt b = pow2(n) - 2 * g - 3 * d_omega(p.d);
    if (b < 0) {
        return false;
    }
    // b >= 2 g 2^{n/2}  <=>  b^2 >= 4 g^2 2^n
    return b * b >= 4 * g * g * pow2(n);
}

std::uint64_t n1(std::uint64_t m)
{
    const auto& p = require_admissible(degree_profile(m));
    for (std::uint64_t n = 1; n < kScanLimit; ++n) {
        if (n1_inequality_holds(p, n)) {
            return n;
        }
    }
    throw std::runtime_error("n1: scan limit exceeded");
}

std::uint64_t n2(std::uint64_t m)
{
    const auto& p = require_admissible(degree_profile(m));
    // The inequality needs 2^n > 4 g^2 at least; start just below that.
    const BigInt g = g_omega_bound(p.d);
    std::uint64_t start = 1;
    {
        const BigInt g2 = 4 * g * g;
        const std::size_t bits = boost::multiprecision::msb(g2);
        start = bits > 2 ? bits - 2 : 1;
    }
    for (std::uint64_t n = start; n < kScanLimit; ++n) {
        if (n2_inequality_holds(p, n)) {
            return n;
        }
    }
    throw std::runtime_error("n2: scan limit exceeded");
}

BigRational v_lower(std::uint64_t n, std::uint64_t m)
{
    const auto& p = require_admissible(degree_profile(m));
    const BigInt dom = d_omega(p.d);
    const BigInt g = g_omega_bound(p.d);
    BigInt root;
    if (n % 2 == 0) {
        root = pow2(n / 2);
    } else {
        root = boost::multiprecision::sqrt(pow2(n)) + 1;  // 2^n is never a square for odd n
    }
    const BigInt numer = pow2(n) - 2 * (g * root + g + dom);
    return BigRational(numer, dom);
}

BoundsReport bounds_report(std::uint64_t m)
{
    BoundsReport r;
    r.profile = require_admissible(degree_profile(m));
    r.n1 = n1(m);
    r.n2 = n2(m);
    r.n_threshold = std::max(r.n1, r.n2);
    r.d_omega = d_omega(r.profile.d);
    r.g_omega_bound = g_omega_bound(r.profile.d);
    r.degenerate_alpha_bound = degenerate_alpha_bound(m);
    r.repeated_value_alpha_bound = repeated_value_alpha_bound(r.profile);
    return r;
}

}  // namespace apncert
