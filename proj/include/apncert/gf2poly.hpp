#pragma once

// Dense univariate polynomials over GF(2^n).
//
// coeffs[i] is the coefficient of x^i. For a degree-m polynomial written
// f = sum_k a_{m-k} x^k (leading coefficient a_0), a_j = coeffs[m - j].

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "apncert/gf2field.hpp"

namespace apncert {

class UPoly {
  public:
    /// The zero polynomial.
    explicit UPoly(FieldPtr field);
    /// Trailing zero coefficients are dropped. Every coefficient must be a
    /// field element.
    UPoly(FieldPtr field, std::vector<Bits> coeffs);

    static UPoly constant(FieldPtr field, Bits c);
    static UPoly monomial(FieldPtr field, Bits c, std::size_t k);
    static UPoly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

    const FieldPtr& field() const noexcept { return field_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    /// Coefficient of x^i; zero past the degree.
    Bits operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    FieldElem coeff(std::size_t i) const { return field_->elem((*this)[i]); }
    Bits lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::span<const Bits> coeffs() const noexcept { return c_; }

    /// Horner evaluation on raw words.
    Bits eval(Bits x) const noexcept
    {
        Bits acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = field_->mul(acc, x) ^ *it;
        }
        return acc;
    }
    FieldElem operator()(const FieldElem& x) const;

    friend bool operator==(const UPoly& a, const UPoly& b);

  private:
    void normalize() noexcept;

    FieldPtr field_;
    std::vector<Bits> c_;
};

UPoly operator+(const UPoly& a, const UPoly& b);
inline UPoly operator-(const UPoly& a, const UPoly& b) { return a + b; }
UPoly operator*(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, Bits c);
UPoly add_constant(const UPoly& a, Bits c);
UPoly monic(const UPoly& a);
/// p(x)^2: coefficients squared, exponents doubled.
UPoly square(const UPoly& a);
/// p(x)^{2^k}.
UPoly frobenius_power(const UPoly& a, int k);
/// x^k * a(x).
UPoly shift(const UPoly& a, std::size_t k);

struct DivMod {
    UPoly quot;
    UPoly rem;
};
DivMod divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);

UPoly compose(const UPoly& f, const UPoly& g);
FieldElem evaluate(const UPoly& f, const FieldElem& x);

UPoly formal_derivative(const UPoly& f);
/// Second Hasse-Schmidt derivative: x^k contributes binom(k,2) mod 2 at x^{k-2}.
UPoly hasse2(const UPoly& f);

/// Monic gcd; throws when both inputs are zero.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Resultant with respect to the actual degrees of the inputs.
FieldElem resultant(const UPoly& a, const UPoly& b);
/// Sylvester resultant with formal degrees deg_a >= deg(a), deg_b >= deg(b).
FieldElem resultant_formal(const UPoly& a, const UPoly& b, int deg_a, int deg_b);

/// s with s^2 = f; throws if f has an odd-exponent term.
UPoly sqrt_even(const UPoly& f);
/// Product of the distinct irreducible factors of f (up to a unit, monic).
UPoly squarefree_part(const UPoly& f);
bool is_squarefree(const UPoly& f);

/// x^{2^k} mod f for nonconstant f.
UPoly x_frobenius_mod(const UPoly& f, std::uint64_t k);

/// Number of distinct roots of f in its own field: deg gcd(f, x^{2^n} - x).
std::uint64_t count_roots_in_field(const UPoly& f);
/// Least k such that squarefree f splits over GF(2^{n k}).
std::uint64_t splitting_degree(const UPoly& f);
/// Degrees occurring in the distinct-degree factorization of a squarefree f.
std::vector<std::uint64_t> distinct_degree_profile(const UPoly& f);

/// Distinct roots in the coefficient field, sorted: gcd with x^{2^n} - x,
/// then trace splitting by the basis elements.
std::vector<Bits> roots_in_field(const UPoly& f);
/// Distinct roots by evaluating at every field element (2^n <= 2^24).
std::vector<Bits> roots_by_scan(const UPoly& f);

/// Unique polynomial of degree < points.size() through the points.
UPoly interpolate(std::span<const std::pair<FieldElem, FieldElem>> points);
UPoly interpolate(const FieldPtr& field, std::span<const Bits> xs, std::span<const Bits> ys);

/// Image of f under a field embedding.
UPoly embed_poly(const Embedding& emb, const UPoly& f);
/// Reinterprets a polynomial with 0/1 coefficients over another field.
UPoly lift_binary(const UPoly& f, FieldPtr target);

}  // namespace apncert
