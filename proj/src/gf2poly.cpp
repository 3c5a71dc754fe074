#include "apncert/gf2poly.hpp"

#include <algorithm>
#include <numeric>

#include "apncert/numtheory.hpp"

namespace apncert {

namespace {

void require_same(const UPoly& a, const UPoly& b)
{
    require_same_field(*a.field(), *b.field());
}

// In-place reduction of w modulo the monic polynomial m (degree dm >= 1).
void reduce_monic(std::vector<Bits>& w, std::span<const Bits> m, const Field& F)
{
    const std::size_t dm = m.size() - 1;
    for (std::size_t k = w.size(); k-- > dm;) {
        const Bits c = w[k];
        if (c == 0) {
            continue;
        }
        w[k] = 0;
        const std::size_t base = k - dm;
        for (std::size_t j = 0; j < dm; ++j) {
            if (m[j] != 0) {
                w[base + j] ^= F.mul(c, m[j]);
            }
        }
    }
    if (w.size() > dm) {
        w.resize(dm);
    }
}

// v <- v^2 mod m for a reduced v (size dm), m monic.
void square_mod(std::vector<Bits>& v, std::span<const Bits> m, const Field& F, std::vector<Bits>& scratch)
{
    const std::size_t dm = m.size() - 1;
    scratch.assign(2 * dm > 0 ? 2 * dm - 1 : 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            scratch[2 * i] = F.sqr(v[i]);
        }
    }
    reduce_monic(scratch, m, F);
    v.assign(scratch.begin(), scratch.end());
    v.resize(dm, 0);
}

}  // namespace

UPoly::UPoly(FieldPtr field) : field_(std::move(field))
{
    if (!field_) {
        throw AlgebraError("polynomial without a field");
    }
}

UPoly::UPoly(FieldPtr field, std::vector<Bits> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    if (!field_) {
        throw AlgebraError("polynomial without a field");
    }
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!field_->contains(c_[i])) {
            throw AlgebraError("coefficient " + std::to_string(i) + " = " + to_hex(c_[i]) +
                               " is not an element of GF(2^" + std::to_string(field_->degree()) + ")");
        }
    }
    normalize();
}

void UPoly::normalize() noexcept
{
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

UPoly UPoly::constant(FieldPtr field, Bits c)
{
    return UPoly(std::move(field), std::vector<Bits>{c});
}

UPoly UPoly::monomial(FieldPtr field, Bits c, std::size_t k)
{
    std::vector<Bits> v(k + 1, 0);
    v[k] = c;
    return UPoly(std::move(field), std::move(v));
}

FieldElem UPoly::operator()(const FieldElem& x) const
{
    require_same_field(*field_, *x.field());
    return field_->elem(eval(x.bits()));
}

bool operator==(const UPoly& a, const UPoly& b)
{
    return a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

UPoly operator+(const UPoly& a, const UPoly& b)
{
    require_same(a, b);
    std::vector<Bits> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        v[i] = a.coeffs()[i];
    }
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
        v[i] ^= b.coeffs()[i];
    }
    return UPoly(a.field(), std::move(v));
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) {
        return UPoly(a.field());
    }
    const Field& F = *a.field();
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Bits> v(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < bc.size(); ++j) {
            v[i + j] ^= F.mul(ac[i], bc[j]);
        }
    }
    return UPoly(a.field(), std::move(v));
}

UPoly scale(const UPoly& a, Bits c)
{
    std::vector<Bits> v(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : v) {
        x = a.field()->mul(x, c);
    }
    return UPoly(a.field(), std::move(v));
}

UPoly add_constant(const UPoly& a, Bits c)
{
    std::vector<Bits> v(a.coeffs().begin(), a.coeffs().end());
    if (v.empty()) {
        v.push_back(0);
    }
    v[0] ^= c;
    return UPoly(a.field(), std::move(v));
}

UPoly monic(const UPoly& a)
{
    if (a.is_zero()) {
        throw AlgebraError("monic: zero polynomial");
    }
    return a.is_monic() ? a : scale(a, a.field()->inv(a.lead()));
}

UPoly square(const UPoly& a)
{
    if (a.is_zero()) {
        return a;
    }
    std::vector<Bits> v(2 * a.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        v[2 * i] = a.field()->sqr(a.coeffs()[i]);
    }
    return UPoly(a.field(), std::move(v));
}

UPoly frobenius_power(const UPoly& a, int k)
{
    UPoly r = a;
    for (int i = 0; i < k; ++i) {
        r = square(r);
    }
    return r;
}

UPoly shift(const UPoly& a, std::size_t k)
{
    if (a.is_zero()) {
        return a;
    }
    std::vector<Bits> v(k, 0);
    v.insert(v.end(), a.coeffs().begin(), a.coeffs().end());
    return UPoly(a.field(), std::move(v));
}

DivMod divmod(const UPoly& a, const UPoly& b)
{
    require_same(a, b);
    if (b.is_zero()) {
        throw AlgebraError("polynomial division by zero");
    }
    const Field& F = *a.field();
    if (a.degree() < b.degree()) {
        return {UPoly(a.field()), a};
    }
    const Bits inv_lead = F.inv(b.lead());
    const auto bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Bits> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<Bits> q(r.size() - db, 0);
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k] == 0) {
            continue;
        }
        const Bits c = F.mul(r[k], inv_lead);
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) {
            r[k - db + j] ^= F.mul(c, bc[j]);
        }
    }
    r.resize(db);
    return {UPoly(a.field(), std::move(q)), UPoly(a.field(), std::move(r))};
}

UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).rem; }
UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).quot; }

UPoly compose(const UPoly& f, const UPoly& g)
{
    require_same(f, g);
    UPoly acc(f.field());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = add_constant(acc * g, f.coeffs()[i]);
    }
    return acc;
}

FieldElem evaluate(const UPoly& f, const FieldElem& x) { return f(x); }

UPoly formal_derivative(const UPoly& f)
{
    if (f.degree() < 1) {
        return UPoly(f.field());
    }
    std::vector<Bits> v(f.coeffs().size() - 1, 0);
    for (std::size_t k = 1; k < f.coeffs().size(); k += 2) {
        v[k - 1] = f.coeffs()[k];
    }
    return UPoly(f.field(), std::move(v));
}

UPoly hasse2(const UPoly& f)
{
    if (f.degree() < 2) {
        return UPoly(f.field());
    }
    std::vector<Bits> v(f.coeffs().size() - 2, 0);
    for (std::size_t k = 2; k < f.coeffs().size(); ++k) {
        // binom(k, 2) is odd exactly when k = 2, 3 (mod 4).
        if ((k & 2) != 0) {
            v[k - 2] = f.coeffs()[k];
        }
    }
    return UPoly(f.field(), std::move(v));
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    require_same(a, b);
    if (a.is_zero() && b.is_zero()) {
        throw AlgebraError("gcd of two zero polynomials");
    }
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

FieldElem resultant(const UPoly& a, const UPoly& b)
{
    require_same(a, b);
    if (a.is_zero() || b.is_zero()) {
        throw AlgebraError("resultant of a zero polynomial");
    }
    const Field& F = *a.field();
    Bits res = 1;
    UPoly A = a, B = b;
    for (;;) {
        const int da = A.degree();
        const int db = B.degree();
        if (db == 0) {
            return F.elem(F.mul(res, F.pow(B.lead(), static_cast<std::uint64_t>(da))));
        }
        if (da == 0) {
            return F.elem(F.mul(res, F.pow(A.lead(), static_cast<std::uint64_t>(db))));
        }
        UPoly R = A % B;
        if (R.is_zero()) {
            return F.zero();
        }
        // Res(A, B) = +- lc(B)^{deg A - deg R} Res(B, R); signs vanish in characteristic 2.
        res = F.mul(res, F.pow(B.lead(), static_cast<std::uint64_t>(da - R.degree())));
        A = std::move(B);
        B = std::move(R);
    }
}

FieldElem resultant_formal(const UPoly& a, const UPoly& b, int deg_a, int deg_b)
{
    require_same(a, b);
    if (a.degree() > deg_a || b.degree() > deg_b) {
        throw AlgebraError("resultant_formal: formal degree below actual degree");
    }
    const Field& F = *a.field();
    if (deg_a == 0 && deg_b == 0) {
        return F.one();
    }
    if (a.is_zero() || b.is_zero()) {
        return F.zero();
    }
    const int drop_a = deg_a - a.degree();
    const int drop_b = deg_b - b.degree();
    if (drop_a > 0 && drop_b > 0) {
        return F.zero();
    }
    FieldElem r = resultant(a, b);
    if (drop_a > 0) {
        r = r * F.elem(F.pow(b.lead(), static_cast<std::uint64_t>(drop_a)));
    } else if (drop_b > 0) {
        r = r * F.elem(F.pow(a.lead(), static_cast<std::uint64_t>(drop_b)));
    }
    return r;
}

UPoly sqrt_even(const UPoly& f)
{
    const auto c = f.coeffs();
    std::vector<Bits> v((c.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 1) {
            if (c[i] != 0) {
                throw AlgebraError("sqrt_even: odd exponent " + std::to_string(i) + " present");
            }
        } else {
            v[i / 2] = f.field()->sqrt(c[i]);
        }
    }
    return UPoly(f.field(), std::move(v));
}

UPoly squarefree_part(const UPoly& f)
{
    if (f.is_zero()) {
        throw AlgebraError("squarefree_part of zero");
    }
    if (f.degree() == 0) {
        return UPoly::constant(f.field(), 1);
    }
    const UPoly d = formal_derivative(f);
    if (d.is_zero()) {
        return squarefree_part(sqrt_even(f));
    }
    const UPoly g = gcd(f, d);
    if (g.degree() == 0) {
        return monic(f);
    }
    // f / gcd(f, f') keeps each factor whose multiplicity is odd, once.
    const UPoly w = monic(f / g);
    const UPoly rg = squarefree_part(g);
    return monic(w * rg / gcd(w, rg));
}

bool is_squarefree(const UPoly& f)
{
    if (f.is_zero()) {
        return false;
    }
    if (f.degree() == 0) {
        return true;
    }
    const UPoly d = formal_derivative(f);
    return !d.is_zero() && gcd(f, d).degree() == 0;
}

UPoly x_frobenius_mod(const UPoly& f, std::uint64_t k)
{
    if (f.degree() < 1) {
        throw AlgebraError("x_frobenius_mod: modulus must be nonconstant");
    }
    const UPoly m = monic(f);
    const Field& F = *f.field();
    const UPoly xm = UPoly::x(f.field()) % m;
    std::vector<Bits> v(xm.coeffs().begin(), xm.coeffs().end());
    v.resize(static_cast<std::size_t>(m.degree()), 0);
    std::vector<Bits> scratch;
    for (std::uint64_t i = 0; i < k; ++i) {
        square_mod(v, m.coeffs(), F, scratch);
    }
    return UPoly(f.field(), std::move(v));
}

std::uint64_t count_roots_in_field(const UPoly& f)
{
    if (f.is_zero()) {
        throw AlgebraError("count_roots_in_field: zero polynomial");
    }
    if (f.degree() == 0) {
        return 0;
    }
    const UPoly xq = x_frobenius_mod(f, static_cast<std::uint64_t>(f.field()->degree()));
    const UPoly h = xq + UPoly::x(f.field());
    if (h.is_zero()) {
        return static_cast<std::uint64_t>(f.degree());
    }
    return static_cast<std::uint64_t>(gcd(f, h).degree());
}

std::vector<std::uint64_t> distinct_degree_profile(const UPoly& f)
{
    if (!is_squarefree(f)) {
        throw AlgebraError("distinct_degree_profile: polynomial is not squarefree");
    }
    std::vector<std::uint64_t> degs;
    if (f.degree() < 1) {
        return degs;
    }
    const auto n = static_cast<std::uint64_t>(f.field()->degree());
    const UPoly X = UPoly::x(f.field());
    UPoly h = monic(f);
    UPoly w = X % h;
    std::uint64_t i = 0;
    while (h.degree() >= 2 * static_cast<int>(i + 1)) {
        ++i;
        // w <- w^{2^n} mod h
        std::vector<Bits> v(w.coeffs().begin(), w.coeffs().end());
        v.resize(static_cast<std::size_t>(h.degree()), 0);
        std::vector<Bits> scratch;
        for (std::uint64_t s = 0; s < n; ++s) {
            square_mod(v, h.coeffs(), *f.field(), scratch);
        }
        w = UPoly(f.field(), std::move(v));
        const UPoly t = w + X;
        const UPoly g = t.is_zero() ? h : gcd(h, t);
        if (g.degree() > 0) {
            degs.push_back(i);
            h = h / g;
            if (h.degree() < 1) {
                break;
            }
            w = w % h;
        }
    }
    if (h.degree() > 0) {
        degs.push_back(static_cast<std::uint64_t>(h.degree()));
    }
    return degs;
}

std::uint64_t splitting_degree(const UPoly& f)
{
    std::uint64_t k = 1;
    for (std::uint64_t d : distinct_degree_profile(f)) {
        k = nt::lcm(k, d);
    }
    return k;
}

namespace {

void split_linear(const UPoly& g, std::vector<Bits>& out)
{
    if (g.degree() == 1) {
        out.push_back(g.coeffs()[0]);  // monic x + c has root c
        return;
    }
    const Field& F = *g.field();
    const int n = F.degree();
    std::vector<Bits> scratch;
    for (int j = 0; j < n; ++j) {
        // t = Tr(c x) mod g, with c running over the polynomial basis.
        const Bits c = Bits{1} << j;
        UPoly y = UPoly::monomial(g.field(), c, 1) % g;
        std::vector<Bits> v(y.coeffs().begin(), y.coeffs().end());
        v.resize(static_cast<std::size_t>(g.degree()), 0);
        std::vector<Bits> acc = v;
        for (int i = 1; i < n; ++i) {
            square_mod(v, g.coeffs(), F, scratch);
            for (std::size_t s = 0; s < acc.size(); ++s) {
                acc[s] ^= v[s];
            }
        }
        const UPoly t(g.field(), std::move(acc));
        if (t.is_zero()) {
            continue;
        }
        const UPoly h = gcd(g, t);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, out);
            split_linear(monic(g / h), out);
            return;
        }
    }
    throw AlgebraError("split_linear: trace splitting failed (input not a product of distinct linear factors)");
}

}  // namespace

std::vector<Bits> roots_in_field(const UPoly& f)
{
    if (f.is_zero()) {
        throw AlgebraError("roots_in_field: zero polynomial");
    }
    std::vector<Bits> out;
    if (f.degree() < 1) {
        return out;
    }
    const UPoly m = monic(f);
    const UPoly xq = x_frobenius_mod(m, static_cast<std::uint64_t>(f.field()->degree()));
    const UPoly h = xq + UPoly::x(f.field());
    const UPoly g = h.is_zero() ? squarefree_part(m) : gcd(m, h);
    if (g.degree() >= 1) {
        split_linear(g, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bits> roots_by_scan(const UPoly& f)
{
    if (f.is_zero()) {
        throw AlgebraError("roots_by_scan: zero polynomial");
    }
    if (f.field()->degree() > 24) {
        throw AlgebraError("roots_by_scan: field larger than 2^24 elements");
    }
    std::vector<Bits> out;
    for (Bits x = 0;; ++x) {
        if (f.eval(x) == 0) {
            out.push_back(x);
        }
        if (x == f.field()->max_element()) {
            break;
        }
    }
    return out;
}

UPoly interpolate(const FieldPtr& field, std::span<const Bits> xs, std::span<const Bits> ys)
{
    if (xs.size() != ys.size()) {
        throw AlgebraError("interpolate: abscissae and ordinates differ in length");
    }
    const Field& F = *field;
    const std::size_t k = xs.size();
    {
        std::vector<Bits> sorted(xs.begin(), xs.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw AlgebraError("interpolate: repeated abscissa");
        }
    }
    // Newton divided differences.
    std::vector<Bits> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < k; ++level) {
        for (std::size_t i = k - 1; i >= level; --i) {
            const Bits num = dd[i] ^ dd[i - 1];
            const Bits den = xs[i] ^ xs[i - level];
            dd[i] = F.div(num, den);
            if (i == level) {
                break;
            }
        }
    }
    std::vector<Bits> poly;
    if (k == 0) {
        return UPoly(field);
    }
    poly.assign(1, dd[k - 1]);
    for (std::size_t i = k - 1; i-- > 0;) {
        // poly <- poly * (x - xs[i]) + dd[i]
        poly.push_back(0);
        for (std::size_t j = poly.size() - 1; j > 0; --j) {
            poly[j] = poly[j - 1] ^ F.mul(poly[j], xs[i]);
        }
        poly[0] = F.mul(poly[0], xs[i]) ^ dd[i];
    }
    return UPoly(field, std::move(poly));
}

UPoly interpolate(std::span<const std::pair<FieldElem, FieldElem>> points)
{
    if (points.empty()) {
        throw AlgebraError("interpolate: no points");
    }
    const FieldPtr& field = points.front().first.field();
    std::vector<Bits> xs, ys;
    for (const auto& [x, y] : points) {
        require_same_field(*field, *x.field());
        require_same_field(*field, *y.field());
        xs.push_back(x.bits());
        ys.push_back(y.bits());
    }
    return interpolate(field, xs, ys);
}

UPoly embed_poly(const Embedding& emb, const UPoly& f)
{
    require_same_field(*emb.base(), *f.field());
    std::vector<Bits> v;
    v.reserve(f.coeffs().size());
    for (Bits c : f.coeffs()) {
        v.push_back(emb.embed_bits(c));
    }
    return UPoly(emb.ext(), std::move(v));
}

UPoly lift_binary(const UPoly& f, FieldPtr target)
{
    for (Bits c : f.coeffs()) {
        if (c > 1) {
            throw AlgebraError("lift_binary: coefficient outside GF(2)");
        }
    }
    return UPoly(std::move(target), std::vector<Bits>(f.coeffs().begin(), f.coeffs().end()));
}

}  // namespace apncert
