#pragma once

// Structure of L_1(x^{m-1}) for m = 2^r (2^l + 1): trace polynomials,
// the explicit critical points tau_i built from d-th roots of unity, and the
// checks relating gcd(r, l) to the vanishing of P_l(tau_i + tau_j).
// Everything here is over GF(2) or GF(2^N) with N = ord_d(2), alpha = 1.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "apncert/gf2poly.hpp"

namespace apncert {

/// P_k(x) = x + x^2 + ... + x^{2^{k-1}} over GF(2). k >= 1.
UPoly trace_poly(int k);
FieldElem trace_poly_eval(int k, const FieldElem& x);

struct GcdLemma {
    std::uint64_t d = 0;
    std::uint64_t gcd_r_ell = 0;
    std::uint64_t gcd_value = 0;              // gcd(d, 2^{2l} - 1)
    std::optional<std::uint64_t> expected;    // 1 or 3 when gcd(r, l) <= 2
    bool holds() const noexcept { return !expected || *expected == gcd_value; }
};

GcdLemma gcd_lemma_check(int r, int ell);

/// x^{2^r-1} + (1 + sum_{k=r}^{r+l-1} x^{2^k}) sum_{k=0}^{r-1} x^{2^k-1}
UPoly monomial_L1_closed_form(int r, int ell);

/// Composition of the closed form with x(x+1) equals (x+1)^{m-1} + x^{m-1}.
bool monomial_L1_identity(int r, int ell);

/// x^2 (L_1(x^{m-1}))' = P_r^2 + P_l^{2^r} P_{r-1}^2.
bool derivative_identity_check(int r, int ell);

struct MonomialRootSystem {
    int r = 0;
    int ell = 0;
    std::uint64_t m = 0;
    std::uint64_t d = 0;
    std::uint64_t N = 0;
    FieldPtr field;
    std::vector<FieldElem> thetas;
    std::vector<FieldElem> taus;
    bool taus_are_roots = false;
    bool p_r_minus_1_nonzero = false;  // P_{r-1}(tau_i) != 0 for every i
};

/// ord_d(2) for the grid point, whether or not it is feasible.
std::uint64_t splitting_degree_of(int r, int ell);

/// Throws AlgebraError when N > 64.
MonomialRootSystem monomial_root_system(int r, int ell);

struct VanishingPairsResult {
    std::vector<std::pair<std::size_t, std::size_t>> vanishing_pairs;
    bool verdict = false;   // no vanishing pair
    bool expected = false;  // gcd(r, l) <= 2
    bool agrees() const noexcept { return verdict == expected; }
};

VanishingPairsResult vanishing_pairs_check(const MonomialRootSystem& sys);
VanishingPairsResult vanishing_pairs_check(int r, int ell);

struct RatioChainResult {
    std::size_t pairs_checked = 0;
    bool holds = true;
};

/// Ratio chain on every vanishing pair; vacuously true without any.
RatioChainResult ratio_chain_check(const MonomialRootSystem& sys, const VanishingPairsResult& vp);
RatioChainResult ratio_chain_check(int r, int ell);

struct StructureReport {
    int r = 0;
    int ell = 0;
    std::uint64_t m = 0;
    std::uint64_t d = 0;
    std::uint64_t N = 0;
    bool feasible = false;
    GcdLemma gcd_lemma;
    bool closed_form_identity = false;
    bool closed_form_degree = false;
    bool derivative_identity = false;
    std::size_t tau_count = 0;
    bool taus_are_roots = false;
    bool p_r_minus_1_nonzero = false;
    std::optional<VanishingPairsResult> vanishing;
    std::optional<RatioChainResult> ratio_chain;

    bool ok() const noexcept;
};

StructureReport structure_report(int r, int ell);

/// Row-major over r in [2, rmax], l in [1, lmax].
std::vector<StructureReport> structure_grid(int rmax, int lmax);

}  // namespace apncert
