#include "apncert/gf2field.hpp"

#include <array>
#include <cctype>

#include "apncert/numtheory.hpp"

namespace apncert {

using kernels::bit_degree;
using kernels::u128;

namespace detail {

Reducer::Reducer(int degree, Bits low_bits) : n(degree), low(low_bits)
{
    mask = n == 64 ? ~Bits{0} : ((Bits{1} << n) - 1);
    // Long division of x^{2n} by P = x^n + low; the quotient's top bit x^n
    // is implicit and the first subtraction leaves low * x^n.
    u128 rem = static_cast<u128>(low) << n;
    mu_low = 0;
    for (int i = 2 * n - 1; i >= n; --i) {
        if ((rem >> i) & 1) {
            mu_low |= Bits{1} << (i - n);
            rem ^= (static_cast<u128>(1) << i) ^ (static_cast<u128>(low) << (i - n));
        }
    }
}

}  // namespace detail

ModulusBits bitpoly_mod(ModulusBits a, ModulusBits b)
{
    const int db = bit_degree(b);
    if (db < 0) {
        throw AlgebraError("bitpoly_mod: division by zero polynomial");
    }
    for (int da = bit_degree(a); da >= db; da = bit_degree(a)) {
        a ^= b << (da - db);
    }
    return a;
}

ModulusBits bitpoly_gcd(ModulusBits a, ModulusBits b)
{
    while (b != 0) {
        a = bitpoly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible_gf2(ModulusBits poly)
{
    const int n = bit_degree(poly);
    if (n < 1 || n > 64) {
        return false;
    }
    if (n == 1) {
        return true;
    }
    const auto low = static_cast<Bits>(poly ^ (static_cast<u128>(1) << n));
    const detail::Reducer r(n, low);
    const Bits x = 2;
    auto frob_power = [&](int k) {
        Bits v = x;
        for (int i = 0; i < k; ++i) {
            v = r.mul(v, v);
        }
        return v;
    };
    if (frob_power(n) != x) {
        return false;
    }
    for (std::uint64_t p : nt::prime_factors(static_cast<std::uint64_t>(n))) {
        const Bits h = frob_power(n / static_cast<int>(p)) ^ x;
        if (bitpoly_gcd(poly, h) != 1) {
            return false;
        }
    }
    return true;
}

ModulusBits default_modulus(int n)
{
    if (n < 1 || n > 64) {
        throw AlgebraError("field degree must lie in [1, 64], got " + std::to_string(n));
    }
    static std::mutex mu;
    static std::array<ModulusBits, 65> cache{};
    std::lock_guard<std::mutex> lock(mu);
    if (cache[static_cast<std::size_t>(n)] != 0) {
        return cache[static_cast<std::size_t>(n)];
    }
    const ModulusBits top = static_cast<u128>(1) << n;
    ModulusBits found = 0;
    for (u128 low = 1;; low += 2) {
        if (is_irreducible_gf2(top | low)) {
            found = top | low;
            break;
        }
    }
    cache[static_cast<std::size_t>(n)] = found;
    return found;
}

std::string to_hex(ModulusBits v)
{
    if (v == 0) {
        return "0x0";
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    while (v != 0) {
        s.push_back(digits[static_cast<unsigned>(v & 0xF)]);
        v >>= 4;
    }
    return "0x" + std::string(s.rbegin(), s.rend());
}

ModulusBits parse_hex(const std::string& s)
{
    std::size_t i = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        i = 2;
    }
    if (i == s.size()) {
        throw AlgebraError("empty hex string '" + s + "'");
    }
    ModulusBits v = 0;
    int digits = 0;
    for (; i < s.size(); ++i) {
        const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
        int d;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            d = c - 'a' + 10;
        } else {
            throw AlgebraError("invalid hex digit in '" + s + "'");
        }
        if (v != 0 || d != 0) {
            if (++digits > 32) {
                throw AlgebraError("hex value too large: '" + s + "'");
            }
        }
        v = (v << 4) | static_cast<unsigned>(d);
    }
    return v;
}

Field::Field(int n, ModulusBits modulus)
{
    if (n < 1 || n > 64) {
        throw AlgebraError("field degree must lie in [1, 64], got " + std::to_string(n));
    }
    if (bit_degree(modulus) != n) {
        throw AlgebraError("modulus " + to_hex(modulus) + " does not have degree " + std::to_string(n));
    }
    if (!is_irreducible_gf2(modulus)) {
        throw AlgebraError("modulus " + to_hex(modulus) + " is reducible over GF(2)");
    }
    r_ = detail::Reducer(n, static_cast<Bits>(modulus ^ (static_cast<u128>(1) << n)));

    // Trace is linear: record Tr(x^i) for each basis vector.
    for (int i = 0; i < n; ++i) {
        const Bits e = (n == 1) ? Bits{1} : (Bits{1} << i);
        Bits acc = 0, v = e;
        for (int j = 0; j < n; ++j) {
            acc ^= v;
            v = sqr(v);
        }
        if (acc == 1) {
            trace_mask_ |= e;
        }
    }

    // Preimage table for y -> y^2 + y, kept in echelon form by pivot bit.
    as_rows_.assign(static_cast<std::size_t>(n), AsRow{0, 0});
    for (int i = 0; i < n; ++i) {
        Bits pre = Bits{1} << i;
        Bits img = sqr(pre) ^ pre;
        while (img != 0) {
            const int p = 63 - __builtin_clzll(img);
            auto& row = as_rows_[static_cast<std::size_t>(p)];
            if (row.image == 0) {
                row = AsRow{img, pre};
                break;
            }
            img ^= row.image;
            pre ^= row.preimage;
        }
    }
}

FieldPtr Field::make(int n)
{
    return std::make_shared<const Field>(n, default_modulus(n));
}

FieldPtr Field::make(int n, ModulusBits modulus)
{
    return std::make_shared<const Field>(n, modulus);
}

ModulusBits Field::modulus() const noexcept
{
    return (static_cast<u128>(1) << r_.n) | r_.low;
}

bool Field::same_as(const Field& other) const noexcept
{
    return this == &other || (r_.n == other.r_.n && r_.low == other.r_.low);
}

Bits Field::pow(Bits a, std::uint64_t e) const noexcept
{
    Bits r = 1;
    while (e != 0) {
        if (e & 1) {
            r = mul(r, a);
        }
        e >>= 1;
        if (e != 0) {
            a = sqr(a);
        }
    }
    return r;
}

Bits Field::inv(Bits a) const
{
    if (a == 0) {
        throw AlgebraError("inversion of zero");
    }
    return pow(a, r_.mask - 1);
}

Bits Field::sqrt(Bits a) const noexcept
{
    for (int i = 1; i < r_.n; ++i) {
        a = sqr(a);
    }
    return a;
}

Bits Field::half_trace(Bits u) const
{
    if (r_.n % 2 == 0) {
        throw AlgebraError("half trace is defined for odd extension degree only");
    }
    Bits acc = 0;
    for (int i = 0; i <= (r_.n - 1) / 2; ++i) {
        acc ^= u;
        u = sqr(sqr(u));
    }
    return acc;
}

std::optional<Bits> Field::solve_y2_plus_y(Bits u) const noexcept
{
    Bits y = 0;
    while (u != 0) {
        const int p = 63 - __builtin_clzll(u);
        const auto& row = as_rows_[static_cast<std::size_t>(p)];
        if (row.image == 0) {
            return std::nullopt;
        }
        u ^= row.image;
        y ^= row.preimage;
    }
    return y;
}

std::optional<Bits> Field::solve_artin_schreier(Bits alpha, Bits c) const
{
    if (alpha == 0) {
        throw AlgebraError("solve_artin_schreier: alpha must be nonzero");
    }
    const Bits u = div(c, sqr(alpha));
    if (trace(u) != 0) {
        return std::nullopt;
    }
    Bits y;
    if (r_.n % 2 == 1) {
        y = half_trace(u);
    } else {
        y = *solve_y2_plus_y(u);
    }
    const Bits x = mul(alpha, y);
    return std::min(x, x ^ alpha);
}

void Field::init_primitive() const
{
    std::call_once(prim_once_, [this] {
        const std::uint64_t group = r_.mask;
        order_factors_ = group == 1 ? std::vector<std::uint64_t>{} : nt::prime_factors(group);
        for (Bits g = 1; g <= r_.mask; ++g) {
            bool ok = true;
            for (std::uint64_t p : order_factors_) {
                if (pow(g, group / p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                prim_ = g;
                return;
            }
        }
    });
}

Bits Field::primitive_element() const
{
    init_primitive();
    return prim_;
}

const std::vector<std::uint64_t>& Field::group_order_factors() const
{
    init_primitive();
    return order_factors_;
}

std::uint64_t Field::element_order(Bits a) const
{
    if (a == 0) {
        throw AlgebraError("element_order: zero has no multiplicative order");
    }
    std::uint64_t ord = r_.mask;
    for (std::uint64_t p : group_order_factors()) {
        while (ord % p == 0 && pow(a, ord / p) == 1) {
            ord /= p;
        }
    }
    return ord;
}

FieldElem Field::elem(Bits a) const
{
    return FieldElem(shared_from_this(), a);
}

FieldElem Field::zero() const { return elem(0); }
FieldElem Field::one() const { return elem(1); }

FieldElem::FieldElem(FieldPtr field, Bits bits) : field_(std::move(field)), bits_(bits)
{
    if (!field_) {
        throw AlgebraError("field element without a field");
    }
    if (!field_->contains(bits_)) {
        throw AlgebraError("value " + to_hex(bits_) + " is not an element of GF(2^" +
                           std::to_string(field_->degree()) + ")");
    }
}

void require_same_field(const Field& a, const Field& b)
{
    if (!a.same_as(b)) {
        throw AlgebraError("operands belong to different fields (GF(2^" + std::to_string(a.degree()) +
                           ") mod " + to_hex(a.modulus()) + " vs GF(2^" + std::to_string(b.degree()) +
                           ") mod " + to_hex(b.modulus()) + ")");
    }
}

FieldElem operator+(const FieldElem& a, const FieldElem& b)
{
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.bits_ ^ b.bits_};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b)
{
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->mul(a.bits_, b.bits_)};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b)
{
    require_same_field(*a.field_, *b.field_);
    return {a.field_, a.field_->div(a.bits_, b.bits_)};
}

bool operator==(const FieldElem& a, const FieldElem& b)
{
    return a.field_->same_as(*b.field_) && a.bits_ == b.bits_;
}

FieldPtr field_new(int n, std::optional<ModulusBits> modulus)
{
    return modulus ? Field::make(n, *modulus) : Field::make(n);
}

std::optional<FieldElem> solve_artin_schreier(const FieldElem& alpha, const FieldElem& c)
{
    require_same_field(*alpha.field(), *c.field());
    auto x = alpha.field()->solve_artin_schreier(alpha.bits(), c.bits());
    if (!x) {
        return std::nullopt;
    }
    return alpha.field()->elem(*x);
}

RootsOfUnity dth_roots_of_unity(std::uint64_t d)
{
    if (d == 0 || d % 2 == 0) {
        throw AlgebraError("roots of unity: d must be odd and positive, got " + std::to_string(d));
    }
    const std::uint64_t order = nt::order_of_two(d);
    if (order > 64) {
        throw AlgebraError("roots of unity: ord_" + std::to_string(d) + "(2) = " + std::to_string(order) +
                           " exceeds 64");
    }
    auto field = Field::make(static_cast<int>(order));
    const Bits zeta = field->pow(field->primitive_element(), field->max_element() / d);
    RootsOfUnity out{field, field->elem(zeta), {}};
    out.roots.reserve(d);
    Bits v = 1;
    for (std::uint64_t k = 0; k < d; ++k) {
        out.roots.push_back(field->elem(v));
        v = field->mul(v, zeta);
    }
    return out;
}

}  // namespace apncert
