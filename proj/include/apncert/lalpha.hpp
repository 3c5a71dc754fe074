#pragma once

// The derivative D_alpha f(x) = f(x + alpha) + f(x) and the operator
// L_alpha: the unique polynomial with L_alpha f(x(x + alpha)) = D_alpha f(x).

#include <stdexcept>
#include <vector>

#include "apncert/gf2poly.hpp"

namespace apncert {

/// An internal identity that must hold by construction failed to hold.
/// Signals a bug, never bad input.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// a_j in the leading-first indexing of a degree-m polynomial.
FieldElem top_coeff(const UPoly& f, int j);

/// x^2 + alpha x.
UPoly t_alpha(const FieldPtr& field, Bits alpha);

UPoly d_alpha(const UPoly& f, const FieldElem& alpha);

/// Expansion of a translation-invariant g (g(x + alpha) = g(x)) in powers
/// of x(x + alpha). Throws InvariantViolation if g is not invariant.
UPoly solve_l_alpha(const UPoly& g, Bits alpha);

/// L_alpha f for any f; the composition identity is re-verified.
UPoly l_alpha_poly(const UPoly& f, const FieldElem& alpha);

struct DerivativeBundle {
    UPoly f;
    FieldElem alpha;
    UPoly d_alpha_f;
    UPoly l_alpha_f;
    /// b[i] is the coefficient of x^{d-i} in l_alpha_f, i = 0..d.
    std::vector<FieldElem> b;
    int m = 0;
    int d = 0;
};

/// Requires deg f = 0 (mod 4) and alpha != 0.
DerivativeBundle l_alpha(const UPoly& f, const FieldElem& alpha);

/// Closed form of L_alpha(x^m) for m = 2^r (2^l + 1), r >= 2, l >= 1:
/// alpha^m + sum_{k<l} alpha^{m - 2^{r+k+1}} x^{2^{r+k}}.
UPoly l_alpha_monomial(int m, const FieldElem& alpha);

/// The weighted substitution a_j -> lambda^j a_j on a degree-m polynomial.
UPoly weighted_scale(const UPoly& f, Bits lambda);

/// b_1 = a2 alpha^2 + a3 alpha            (m = 0 mod 8)
/// b_1 = a0 alpha^4 + a1 alpha^3 + a2 alpha^2 + a3 alpha   (m = 4 mod 8)
FieldElem b1_closed_form(const UPoly& f, const FieldElem& alpha);

}  // namespace apncert
