#pragma once

// Degree admissibility for m = 2^r (2^l + 1) and exact evaluation of the
// field-size thresholds that guarantee maximal differential uniformity.
// All decisions use exact integers; half-integer powers of two are compared
// by squaring after a sign check.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace apncert {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct DegreeProfile {
    std::uint64_t m = 0;
    int r = 0;          // 2-adic valuation of m
    int ell = -1;       // m / 2^r = 2^ell + 1 when shape_ok, else -1
    std::uint64_t d = 0;  // (m - 2) / 2
    std::uint64_t e = 0;  // binom((d - 1) / 2, 2) for odd d, else 0
    std::uint64_t gcd_r_ell = 0;
    bool shape_ok = false;
    bool admissible = false;  // shape_ok, r >= 2, ell >= 1, gcd(r, ell) <= 2
};

/// m must be even and at least 4.
DegreeProfile degree_profile(std::uint64_t m);

/// All admissible m <= limit in increasing order.
std::vector<DegreeProfile> admissible_degrees(std::uint64_t limit);

/// (m-1)(m-4): bound on alphas with degenerate critical points.
BigInt degenerate_alpha_bound(std::uint64_t m);
/// (5d+4) e: bound on alphas with repeated critical values.
BigInt repeated_value_alpha_bound(const DegreeProfile& p);

/// d! 2^{d-1}
BigInt d_omega(std::uint64_t d);
/// d! 2^{d-2} (2d - 3) + 1
BigInt g_omega_bound(std::uint64_t d);

/// 1/2 (2^n - 2^{n/2+1} - 1) > (m-1)(m-4) + (5d+4) e
bool n1_inequality_holds(const DegreeProfile& p, std::uint64_t n);
/// 2^n - 2 g - 3 d_omega >= 2 g 2^{n/2}, i.e. the split-place lower bound is >= 1.
bool n2_inequality_holds(const DegreeProfile& p, std::uint64_t n);

/// Least n from which the respective inequality holds. Throws
/// std::invalid_argument for inadmissible m.
std::uint64_t n1(std::uint64_t m);
std::uint64_t n2(std::uint64_t m);

/// 2^n / d_omega - 2 / d_omega (g 2^{n/2} + g + d_omega) with 2^{n/2}
/// replaced by its ceiling, so the value never overestimates the bound.
BigRational v_lower(std::uint64_t n, std::uint64_t m);

struct BoundsReport {
    DegreeProfile profile;
    std::uint64_t n1 = 0;
    std::uint64_t n2 = 0;
    std::uint64_t n_threshold = 0;  // sufficient, not claimed minimal
    BigInt d_omega;
    BigInt g_omega_bound;
    BigInt degenerate_alpha_bound;
    BigInt repeated_value_alpha_bound;
};

BoundsReport bounds_report(std::uint64_t m);

}  // namespace apncert
