#include "apncert/degstruct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "apncert/lalpha.hpp"
#include "apncert/numtheory.hpp"

namespace apncert {

namespace {

const FieldPtr& gf2()
{
    static const FieldPtr f = Field::make(1);
    return f;
}

void require_grid_point(int r, int ell, int max_sum)
{
    if (r < 2 || ell < 1) {
        throw AlgebraError("need r >= 2 and l >= 1, got r=" + std::to_string(r) + " l=" + std::to_string(ell));
    }
    if (r + ell > max_sum) {
        throw AlgebraError("r + l = " + std::to_string(r + ell) + " exceeds the supported " + std::to_string(max_sum));
    }
}

std::uint64_t m_of(int r, int ell)
{
    return (std::uint64_t{1} << r) * ((std::uint64_t{1} << ell) + 1);
}

// Polynomial identities are built densely; keep degrees in the tens of thousands.
constexpr int kMaxPolySum = 14;

// (x+1)^k + x^k over GF(2), by Lucas: binom(k, i) is odd iff i is a submask of k.
UPoly binary_difference(std::uint64_t k)
{
    std::vector<Bits> c(k, 0);
    for (std::uint64_t i = 0; i < k; ++i) {
        c[i] = (i & k) == i ? 1 : 0;
    }
    return UPoly(gf2(), std::move(c));
}

// L_1(x^{m-1}) by peeling powers of x(x+1) off D_1(x^{m-1}); does not use the closed form.
UPoly l1_by_division(std::uint64_t m)
{
    return solve_l_alpha(binary_difference(m - 1), 1);
}

}  // namespace

UPoly trace_poly(int k)
{
    if (k < 1 || k > 30) {
        throw AlgebraError("trace_poly: k must lie in 1..30");
    }
    std::vector<Bits> c((std::size_t{1} << (k - 1)) + 1, 0);
    for (int i = 0; i < k; ++i) {
        c[std::size_t{1} << i] = 1;
    }
    return UPoly(gf2(), std::move(c));
}

FieldElem trace_poly_eval(int k, const FieldElem& x)
{
    if (k < 1) {
        throw AlgebraError("trace_poly_eval: k must be positive");
    }
    const Field& F = *x.field();
    Bits y = x.bits();
    Bits acc = y;
    for (int i = 1; i < k; ++i) {
        y = F.sqr(y);
        acc ^= y;
    }
    return F.elem(acc);
}

GcdLemma gcd_lemma_check(int r, int ell)
{
    require_grid_point(r, ell, 62);
    if (ell > 31) {
        throw AlgebraError("gcd_lemma_check: l must be at most 31");
    }
    GcdLemma g;
    g.d = m_of(r, ell) / 2 - 1;
    g.gcd_r_ell = std::gcd(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(ell));
    g.gcd_value = std::gcd(g.d, (std::uint64_t{1} << (2 * ell)) - 1);
    if (g.gcd_r_ell == 1) {
        g.expected = 1;
    } else if (g.gcd_r_ell == 2) {
        g.expected = 3;
    }
    return g;
}

UPoly monomial_L1_closed_form(int r, int ell)
{
    require_grid_point(r, ell, kMaxPolySum);
    std::vector<Bits> outer((std::size_t{1} << (r + ell - 1)) + 1, 0);
    outer[0] = 1;
    for (int k = r; k < r + ell; ++k) {
        outer[std::size_t{1} << k] = 1;
    }
    std::vector<Bits> inner(std::size_t{1} << (r - 1), 0);
    for (int k = 0; k < r; ++k) {
        inner[(std::size_t{1} << k) - 1] = 1;
    }
    return UPoly::monomial(gf2(), 1, (std::size_t{1} << r) - 1) +
           UPoly(gf2(), std::move(outer)) * UPoly(gf2(), std::move(inner));
}

bool monomial_L1_identity(int r, int ell)
{
    const UPoly closed = monomial_L1_closed_form(r, ell);
    return compose(closed, t_alpha(gf2(), 1)) == binary_difference(m_of(r, ell) - 1);
}

bool derivative_identity_check(int r, int ell)
{
    require_grid_point(r, ell, kMaxPolySum);
    const UPoly lhs = shift(formal_derivative(l1_by_division(m_of(r, ell))), 2);
    const UPoly pr = trace_poly(r);
    const UPoly pl = trace_poly(ell);
    const UPoly prm1 = trace_poly(r - 1);
    const UPoly rhs = square(pr) + frobenius_power(pl, r) * square(prm1);
    return lhs == rhs;
}

std::uint64_t splitting_degree_of(int r, int ell)
{
    require_grid_point(r, ell, 62);
    return nt::order_of_two(m_of(r, ell) / 2 - 1);
}

MonomialRootSystem monomial_root_system(int r, int ell)
{
    require_grid_point(r, ell, kMaxPolySum);
    MonomialRootSystem sys;
    sys.r = r;
    sys.ell = ell;
    sys.m = m_of(r, ell);
    sys.d = sys.m / 2 - 1;
    const RootsOfUnity mu = dth_roots_of_unity(sys.d);
    sys.N = static_cast<std::uint64_t>(mu.field->degree());
    sys.field = mu.field;
    const Field& F = *sys.field;

    const std::size_t half = static_cast<std::size_t>((sys.d - 1) / 2);
    for (std::size_t k = 1; k <= half; ++k) {
        const FieldElem theta = mu.roots[k];
        const FieldElem one = F.one();
        sys.thetas.push_back(theta);
        sys.taus.push_back((one + theta).inv() + (one + theta.square()).inv());
    }

    std::vector<Bits> bits;
    for (const auto& t : sys.taus) {
        if (t.is_zero()) {
            throw InvariantViolation("monomial_root_system: tau_i = 0");
        }
        bits.push_back(t.bits());
    }
    std::sort(bits.begin(), bits.end());
    if (std::adjacent_find(bits.begin(), bits.end()) != bits.end()) {
        throw InvariantViolation("monomial_root_system: two tau_i coincide");
    }

    const UPoly deriv = lift_binary(formal_derivative(l1_by_division(sys.m)), sys.field);
    sys.taus_are_roots = std::all_of(sys.taus.begin(), sys.taus.end(),
                                     [&](const FieldElem& t) { return deriv.eval(t.bits()) == 0; });
    sys.p_r_minus_1_nonzero = std::all_of(sys.taus.begin(), sys.taus.end(),
                                          [&](const FieldElem& t) { return !trace_poly_eval(r - 1, t).is_zero(); });
    return sys;
}

VanishingPairsResult vanishing_pairs_check(const MonomialRootSystem& sys)
{
    VanishingPairsResult out;
    for (std::size_t i = 0; i < sys.taus.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.taus.size(); ++j) {
            if (trace_poly_eval(sys.ell, sys.taus[i] + sys.taus[j]).is_zero()) {
                out.vanishing_pairs.emplace_back(i, j);
            }
        }
    }
    out.verdict = out.vanishing_pairs.empty();
    out.expected = std::gcd(sys.r, sys.ell) <= 2;
    return out;
}

VanishingPairsResult vanishing_pairs_check(int r, int ell)
{
    return vanishing_pairs_check(monomial_root_system(r, ell));
}

RatioChainResult ratio_chain_check(const MonomialRootSystem& sys, const VanishingPairsResult& vp)
{
    RatioChainResult out;
    const int r = sys.r;
    const auto ratio = [r](const FieldElem& x) -> std::optional<FieldElem> {
        const FieldElem den = trace_poly_eval(r - 1, x);
        if (den.is_zero()) {
            return std::nullopt;
        }
        return trace_poly_eval(r, x) / den;
    };
    const std::uint64_t power = std::uint64_t{1} << (r - 1);
    for (const auto& [i, j] : vp.vanishing_pairs) {
        ++out.pairs_checked;
        const FieldElem& ti = sys.taus[i];
        const FieldElem& tj = sys.taus[j];
        const auto ri = ratio(ti);
        const auto rs = ratio(ti + tj);
        const auto rj = ratio(tj);
        if (!ri || !rs || !rj) {
            out.holds = false;
            continue;
        }
        const FieldElem pi = trace_poly_eval(sys.ell, ti).pow(power);
        const FieldElem pj = trace_poly_eval(sys.ell, tj).pow(power);
        if (!(pi == *ri && *ri == *rs && *rs == *rj && *rj == pj)) {
            out.holds = false;
        }
    }
    return out;
}

RatioChainResult ratio_chain_check(int r, int ell)
{
    const auto sys = monomial_root_system(r, ell);
    return ratio_chain_check(sys, vanishing_pairs_check(sys));
}

bool StructureReport::ok() const noexcept
{
    if (!gcd_lemma.holds() || !closed_form_identity || !closed_form_degree || !derivative_identity) {
        return false;
    }
    if (!feasible) {
        return true;
    }
    return tau_count == (d - 1) / 2 && taus_are_roots && p_r_minus_1_nonzero && vanishing && vanishing->agrees() &&
           ratio_chain && ratio_chain->holds;
}

StructureReport structure_report(int r, int ell)
{
    require_grid_point(r, ell, kMaxPolySum);
    StructureReport rep;
    rep.r = r;
    rep.ell = ell;
    rep.m = m_of(r, ell);
    rep.d = rep.m / 2 - 1;
    rep.N = splitting_degree_of(r, ell);
    rep.feasible = rep.N <= 64;
    rep.gcd_lemma = gcd_lemma_check(r, ell);
    rep.closed_form_identity = monomial_L1_identity(r, ell);
    rep.closed_form_degree = monomial_L1_closed_form(r, ell).degree() == static_cast<int>(rep.d);
    rep.derivative_identity = derivative_identity_check(r, ell);
    if (rep.feasible) {
        const auto sys = monomial_root_system(r, ell);
        rep.tau_count = sys.taus.size();
        rep.taus_are_roots = sys.taus_are_roots;
        rep.p_r_minus_1_nonzero = sys.p_r_minus_1_nonzero;
        rep.vanishing = vanishing_pairs_check(sys);
        rep.ratio_chain = ratio_chain_check(sys, *rep.vanishing);
    }
    return rep;
}

std::vector<StructureReport> structure_grid(int rmax, int lmax)
{
    std::vector<StructureReport> out;
    for (int r = 2; r <= rmax; ++r) {
        for (int ell = 1; ell <= lmax; ++ell) {
            out.push_back(structure_report(r, ell));
        }
    }
    return out;
}

}  // namespace apncert
