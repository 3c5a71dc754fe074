#include "apncert/lalpha.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace apncert {

FieldElem top_coeff(const UPoly& f, int j)
{
    const int m = f.degree();
    if (j < 0 || j > m) {
        throw AlgebraError("top_coeff: index " + std::to_string(j) + " outside 0.." + std::to_string(m));
    }
    return f.coeff(static_cast<std::size_t>(m - j));
}

UPoly t_alpha(const FieldPtr& field, Bits alpha)
{
    return UPoly(field, {0, alpha, 1});
}

UPoly d_alpha(const UPoly& f, const FieldElem& alpha)
{
    require_same_field(*f.field(), *alpha.field());
    if (alpha.is_zero()) {
        throw AlgebraError("d_alpha: alpha must be nonzero");
    }
    const UPoly shift_by_alpha(f.field(), {alpha.bits(), 1});
    return compose(f, shift_by_alpha) + f;
}

UPoly solve_l_alpha(const UPoly& g, Bits alpha)
{
    const Field& F = *g.field();
    std::vector<Bits> w(g.coeffs().begin(), g.coeffs().end());
    std::vector<Bits> out;
    // Peel off one power of T = x^2 + alpha x per round: w = q T + r1 x + r0.
    while (!w.empty()) {
        const std::size_t top = w.size() - 1;
        std::vector<Bits> q(top >= 2 ? top - 1 : 0, 0);
        for (std::size_t k = top; k >= 2; --k) {
            const Bits c = w[k];
            q[k - 2] = c;
            w[k - 1] ^= F.mul(alpha, c);
        }
        const Bits r1 = top >= 1 ? w[1] : 0;
        if (r1 != 0) {
            throw InvariantViolation("solve_l_alpha: input is not invariant under x -> x + alpha");
        }
        out.push_back(w[0]);
        while (!q.empty() && q.back() == 0) {
            q.pop_back();
        }
        w = std::move(q);
    }
    return UPoly(g.field(), std::move(out));
}

UPoly l_alpha_poly(const UPoly& f, const FieldElem& alpha)
{
    const UPoly d = d_alpha(f, alpha);
    UPoly l = solve_l_alpha(d, alpha.bits());
    if (!(compose(l, t_alpha(f.field(), alpha.bits())) == d)) {
        throw InvariantViolation("l_alpha: composition with x(x + alpha) does not reproduce D_alpha f");
    }
    return l;
}

DerivativeBundle l_alpha(const UPoly& f, const FieldElem& alpha)
{
    const int m = f.degree();
    if (m > 0 && m % 4 != 0) {
        throw AlgebraError("l_alpha: degree " + std::to_string(m) + " is not divisible by 4");
    }
    DerivativeBundle out{f, alpha, d_alpha(f, alpha), UPoly(f.field()), {}, std::max(m, 0), 0};
    out.l_alpha_f = solve_l_alpha(out.d_alpha_f, alpha.bits());
    if (!(compose(out.l_alpha_f, t_alpha(f.field(), alpha.bits())) == out.d_alpha_f)) {
        throw InvariantViolation("l_alpha: composition with x(x + alpha) does not reproduce D_alpha f");
    }
    out.d = m >= 4 ? (m - 2) / 2 : 0;
    if (out.l_alpha_f.degree() > out.d) {
        throw InvariantViolation("l_alpha: degree exceeds (m - 2) / 2");
    }
    out.b.reserve(static_cast<std::size_t>(out.d) + 1);
    for (int i = 0; i <= out.d; ++i) {
        out.b.push_back(out.l_alpha_f.coeff(static_cast<std::size_t>(out.d - i)));
    }
    return out;
}

UPoly l_alpha_monomial(int m, const FieldElem& alpha)
{
    if (m < 12 || m % 4 != 0) {
        throw AlgebraError("l_alpha_monomial: m = " + std::to_string(m) + " is not of the form 2^r(2^l+1), r >= 2, l >= 1");
    }
    const auto um = static_cast<unsigned>(m);
    const int r = std::countr_zero(um);
    const unsigned rest = um >> r;
    if (rest < 3 || !std::has_single_bit(rest - 1)) {
        throw AlgebraError("l_alpha_monomial: m = " + std::to_string(m) + " is not of the form 2^r(2^l+1)");
    }
    const int ell = std::countr_zero(rest - 1);
    const Field& F = *alpha.field();
    const Bits a = alpha.bits();
    std::vector<Bits> c((std::size_t{1} << (r + ell - 1)) + 1, 0);
    c[0] = F.pow(a, um);
    for (int k = 0; k < ell; ++k) {
        c[std::size_t{1} << (r + k)] = F.pow(a, um - (1u << (r + k + 1)));
    }
    return UPoly(alpha.field(), std::move(c));
}

UPoly weighted_scale(const UPoly& f, Bits lambda)
{
    const Field& F = *f.field();
    const int m = f.degree();
    std::vector<Bits> c(f.coeffs().begin(), f.coeffs().end());
    for (int k = 0; k <= m; ++k) {
        c[static_cast<std::size_t>(k)] = F.mul(c[static_cast<std::size_t>(k)], F.pow(lambda, static_cast<std::uint64_t>(m - k)));
    }
    return UPoly(f.field(), std::move(c));
}

FieldElem b1_closed_form(const UPoly& f, const FieldElem& alpha)
{
    const int m = f.degree();
    if (m < 4 || m % 4 != 0) {
        throw AlgebraError("b1_closed_form: degree must be a positive multiple of 4");
    }
    const FieldElem a2 = top_coeff(f, 2);
    const FieldElem a3 = top_coeff(f, 3);
    FieldElem b1 = a2 * alpha.square() + a3 * alpha;
    if (m % 8 == 4) {
        b1 += top_coeff(f, 0) * alpha.pow(4) + top_coeff(f, 1) * alpha.pow(3);
    }
    return b1;
}

}  // namespace apncert
