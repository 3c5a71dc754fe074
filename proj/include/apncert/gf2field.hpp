#pragma once

// Binary finite fields GF(2^n), 1 <= n <= 64, in polynomial basis.
//
// A Field is immutable after construction and shared through FieldPtr.
// Elements are n-bit words; FieldElem pairs a word with its field and checks
// that binary operations never mix fields. Hot loops work on raw words via
// Field::mul and friends.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apncert/clmul.hpp"

namespace apncert {

using Bits = std::uint64_t;
using ModulusBits = unsigned __int128;

class Field;
class FieldElem;
using FieldPtr = std::shared_ptr<const Field>;

/// Raised for invalid arguments to field or polynomial operations:
/// reducible moduli, context mismatches, division by zero.
class AlgebraError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Arithmetic in GF(2)[x]/(P) for any P of degree n, by Barrett reduction
/// with mu = floor(x^{2n} / P). Exact for products of reduced operands.
struct Reducer {
    int n = 0;
    Bits mask = 0;
    Bits low = 0;     // P - x^n
    Bits mu_low = 0;  // mu - x^n

    Reducer() = default;
    Reducer(int degree, Bits low_bits);

    Bits reduce(kernels::u128 c) const noexcept
    {
        Bits hi, lo;
        if (n == 64) {
            hi = static_cast<Bits>(c >> 64);
            lo = static_cast<Bits>(c);
        } else {
            hi = static_cast<Bits>(c >> n);
            lo = static_cast<Bits>(c) & mask;
        }
        const Bits q = hi ^ static_cast<Bits>(kernels::clmul(hi, mu_low) >> n);
        return lo ^ (static_cast<Bits>(kernels::clmul(q, low)) & mask);
    }

    Bits mul(Bits a, Bits b) const noexcept { return reduce(kernels::clmul(a, b)); }
};

}  // namespace detail

/// Bit encoding helpers for GF(2)[x] polynomials of degree <= 127.
ModulusBits bitpoly_mod(ModulusBits a, ModulusBits b);
ModulusBits bitpoly_gcd(ModulusBits a, ModulusBits b);

/// Rabin's distinct-degree irreducibility test over GF(2).
bool is_irreducible_gf2(ModulusBits poly);

/// The lexicographically least irreducible polynomial of degree n with
/// nonzero constant term (x+1 for n = 1). Cached per degree.
ModulusBits default_modulus(int n);

std::string to_hex(ModulusBits v);
ModulusBits parse_hex(const std::string& s);

class Field : public std::enable_shared_from_this<Field> {
  public:
    /// GF(2^n) with the canonical default modulus.
    static FieldPtr make(int n);
    /// GF(2^n) = GF(2)[x]/(modulus); modulus must be irreducible of degree n.
    static FieldPtr make(int n, ModulusBits modulus);

    int degree() const noexcept { return r_.n; }
    ModulusBits modulus() const noexcept;
    Bits mask() const noexcept { return r_.mask; }
    /// Number of elements minus one, i.e. 2^n - 1.
    Bits max_element() const noexcept { return r_.mask; }
    bool contains(Bits a) const noexcept { return (a & ~r_.mask) == 0; }
    bool same_as(const Field& other) const noexcept;

    Bits add(Bits a, Bits b) const noexcept { return a ^ b; }
    Bits mul(Bits a, Bits b) const noexcept { return r_.mul(a, b); }
    Bits sqr(Bits a) const noexcept { return r_.mul(a, a); }
    Bits pow(Bits a, std::uint64_t e) const noexcept;
    /// Throws AlgebraError on zero.
    Bits inv(Bits a) const;
    Bits div(Bits a, Bits b) const { return mul(a, inv(b)); }
    /// Inverse Frobenius, a^{2^{n-1}}.
    Bits sqrt(Bits a) const noexcept;
    /// Absolute trace to GF(2); returns 0 or 1.
    int trace(Bits a) const noexcept { return __builtin_parityll(a & trace_mask_); }
    /// sum_{i=0}^{(n-1)/2} u^{4^i}; solves y^2 + y = u when n is odd and Tr(u) = 0.
    Bits half_trace(Bits u) const;
    /// Solves y^2 + y = u by the cached linear-algebra preimage table.
    std::optional<Bits> solve_y2_plus_y(Bits u) const noexcept;
    /// Solution of x^2 + alpha x = c with the smaller encoding of {x, x + alpha},
    /// or nothing when Tr(c / alpha^2) = 1. alpha must be nonzero.
    std::optional<Bits> solve_artin_schreier(Bits alpha, Bits c) const;

    /// Least-encoded generator of the multiplicative group.
    Bits primitive_element() const;
    /// Distinct primes dividing 2^n - 1.
    const std::vector<std::uint64_t>& group_order_factors() const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(Bits a) const;

    FieldElem elem(Bits a) const;
    FieldElem zero() const;
    FieldElem one() const;
    /// The class of x (a root of the modulus).
    Bits generator_bits() const noexcept { return r_.n == 1 ? r_.low : Bits{2}; }

    const detail::Reducer& reducer() const noexcept { return r_; }

    explicit Field(int n, ModulusBits modulus);  // use make()

  private:
    struct AsRow {
        Bits image;
        Bits preimage;
    };

    detail::Reducer r_;
    Bits trace_mask_ = 0;
    std::vector<AsRow> as_rows_;  // indexed by pivot bit, image = 0 when absent

    mutable std::once_flag prim_once_;
    mutable Bits prim_ = 0;
    mutable std::vector<std::uint64_t> order_factors_;
    void init_primitive() const;
};

class FieldElem {
  public:
    FieldElem(FieldPtr field, Bits bits);

    const FieldPtr& field() const noexcept { return field_; }
    Bits bits() const noexcept { return bits_; }
    bool is_zero() const noexcept { return bits_ == 0; }
    bool is_one() const noexcept { return bits_ == 1; }

    FieldElem square() const { return {field_, field_->sqr(bits_)}; }
    FieldElem pow(std::uint64_t e) const { return {field_, field_->pow(bits_, e)}; }
    FieldElem inv() const { return {field_, field_->inv(bits_)}; }
    FieldElem sqrt() const { return {field_, field_->sqrt(bits_)}; }
    int trace() const noexcept { return field_->trace(bits_); }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + b; }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
    FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
    FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);

  private:
    FieldPtr field_;
    Bits bits_;
};

/// Throws AlgebraError unless both operands live in the same field.
void require_same_field(const Field& a, const Field& b);

FieldPtr field_new(int n, std::optional<ModulusBits> modulus = std::nullopt);
inline int trace(const FieldElem& a) { return a.trace(); }
std::optional<FieldElem> solve_artin_schreier(const FieldElem& alpha, const FieldElem& c);

/// GF(2^N) with N = ord_d(2), and all d solutions of t^d = 1 listed as
/// zeta^0, zeta^1, ..., zeta^{d-1} where zeta = g^{(2^N-1)/d} for the least
/// primitive element g.
struct RootsOfUnity {
    FieldPtr field;
    FieldElem zeta;
    std::vector<FieldElem> roots;
};
RootsOfUnity dth_roots_of_unity(std::uint64_t d);

/// Ring embedding GF(2^a) -> GF(2^b), a | b, sending the base generator to
/// the least-encoded root of the base modulus in the extension.
class Embedding {
  public:
    Embedding(FieldPtr base, FieldPtr ext);

    const FieldPtr& base() const noexcept { return base_; }
    const FieldPtr& ext() const noexcept { return ext_; }
    FieldElem image_of_generator() const { return ext_->elem(gamma_); }

    Bits embed_bits(Bits a) const noexcept
    {
        Bits r = 0;
        for (int i = 0; a != 0; ++i, a >>= 1) {
            if (a & 1) {
                r ^= powers_[static_cast<std::size_t>(i)];
            }
        }
        return r;
    }
    FieldElem operator()(const FieldElem& a) const;

  private:
    FieldPtr base_;
    FieldPtr ext_;
    Bits gamma_ = 0;
    std::vector<Bits> powers_;
};

}  // namespace apncert
