#pragma once

// Morse certification of L_alpha f and the trace condition, per alpha and
// aggregated over alpha-scans.
//
//   (I.a) nondegenerate critical points: Res((D_alpha f)', (D_alpha f)^[2]) != 0
//   (I.b) distinct critical values:      b0^{de} Pi_d(L_alpha f) != 0
//   (I.c) odd degree:                    deg L_alpha f = d
//   (II)  x^2 + alpha x = b1/b0 solvable in the base field

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apncert/lalpha.hpp"

namespace apncert {

struct MorseReport {
    FieldElem alpha;
    bool cond_Ia = false;
    bool cond_Ib = false;
    bool cond_Ic = false;
    bool cond_II = false;
    FieldElem resultant_value;
    /// Undefined when (I.a) fails.
    std::optional<FieldElem> pi_value;
    std::optional<FieldElem> witness_x;
    bool morse = false;  // Ia && Ib && Ic

    bool certified() const noexcept { return morse && cond_II; }
};

/// Resultant path. Throws AlgebraError when b0 = 0.
std::pair<bool, FieldElem> check_Ia(const DerivativeBundle& bundle);
/// Cross-check path: gcd(g', g^[2]) is constant for g = L_alpha f.
bool check_Ia_via_gcd(const DerivativeBundle& bundle);
/// The Morse nondegeneracy test on an arbitrary g.
bool nondegenerate_critical_points(const UPoly& g);

/// Monic c(y) whose roots are the critical values g(tau) over the roots tau
/// of s = sqrt(g'), with multiplicity. Requires deg g odd and g' != 0; with
/// `require_simple`, s must also be squarefree.
UPoly critical_value_poly(const UPoly& g, bool require_simple);

/// Product over ordered pairs i != j of (g(tau_i) - g(tau_j)), as
/// Res(c, c'). Throws AlgebraError when g has degenerate critical points.
FieldElem pi_d(const UPoly& g);

/// binom((d-1)/2, 2) for odd d.
std::uint64_t e_of_d(int d);

/// b0^{de} Pi_d(L_alpha f), or nothing when (I.a) fails.
std::optional<FieldElem> pi_value(const DerivativeBundle& bundle);

std::pair<bool, std::optional<FieldElem>> check_II(const DerivativeBundle& bundle);

MorseReport morse_report(const DerivativeBundle& bundle);
MorseReport morse_report(const UPoly& f, const FieldElem& alpha);

struct ScanOptions {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct ScanSummary {
    int n = 0;
    int m = 0;
    bool exhaustive = true;
    std::uint64_t scanned = 0;
    std::uint64_t fail_Ia = 0;
    std::uint64_t fail_Ib = 0;  // among alphas passing (I.a)
    std::uint64_t satisfy_II = 0;
    std::uint64_t certified = 0;
    std::optional<Bits> first_certified_alpha;  // least index in scan order

    std::uint64_t bound_Ia = 0;  // (m-1)(m-4)
    std::optional<std::uint64_t> bound_Ib;  // (5d+4)e, admissible m only

    /// Trace-condition bookkeeping (exhaustive scans).
    bool trace_invariant_zero = false;  // a2^2 + a1 a3 == 0
    std::string trace_branch;           // "m=0 mod 8" or "m=4 mod 8"
    std::optional<std::uint64_t> trace_predicted;
    std::optional<bool> trace_matches;
    /// m = 4 mod 8 with a2^2 + a1 a3 = 0: which reading of the count matched
    /// ("2^n-1", "2^(n-1)-1", or "neither").
    std::string trace_reading;

    std::vector<std::string> violations;
    bool bounds_ok() const noexcept { return violations.empty(); }
};

/// OpenMP-parallel scan. Results are identical to alpha_scan_serial.
ScanSummary alpha_scan(const UPoly& f, const ScanOptions& opt);
ScanSummary alpha_scan_serial(const UPoly& f, const ScanOptions& opt);

/// Number of nonzero alpha satisfying (II), by exhaustive scan.
std::uint64_t trace_condition_count(const UPoly& f);

struct InterpDegree {
    int degree = -1;
    FieldElem leading;
    std::optional<FieldElem> predicted_leading;
    std::uint64_t bound = 0;
    std::size_t samples = 0;
    UPoly f;
};

/// Degree in alpha of Res((D_alpha f)', (D_alpha f)^[2]) for a seeded
/// random f of degree m with a0, a1 != 0.
InterpDegree interp_resultant_degree(int m, const FieldPtr& field, std::uint64_t seed);
InterpDegree interp_resultant_degree(const UPoly& f);

/// Degree in alpha of b0^{de} Pi_d(L_alpha f); alphas failing (I.a) are skipped.
InterpDegree interp_pi_degree(int m, const FieldPtr& field, std::uint64_t seed);
InterpDegree interp_pi_degree(const UPoly& f);

}  // namespace apncert
