#include "apncert/gf2field.hpp"
#include "apncert/gf2poly.hpp"

namespace apncert {

namespace {

// Least-encoded root of the GF(2) polynomial `poly` inside `ext`.
Bits least_root(ModulusBits poly, const FieldPtr& ext)
{
    const int deg = kernels::bit_degree(poly);
    if (ext->degree() <= 24) {
        for (Bits z = 0;; ++z) {
            Bits acc = 0;
            for (int i = deg; i >= 0; --i) {
                acc = ext->mul(acc, z) ^ static_cast<Bits>((poly >> i) & 1);
            }
            if (acc == 0) {
                return z;
            }
            if (z == ext->max_element()) {
                break;
            }
        }
        throw AlgebraError("embedding: base modulus has no root in the extension");
    }
    std::vector<Bits> coeffs(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) {
        coeffs[static_cast<std::size_t>(i)] = static_cast<Bits>((poly >> i) & 1);
    }
    const auto roots = roots_in_field(UPoly(ext, std::move(coeffs)));
    if (roots.empty()) {
        throw AlgebraError("embedding: base modulus has no root in the extension");
    }
    return roots.front();
}

}  // namespace

Embedding::Embedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext))
{
    if (!base_ || !ext_) {
        throw AlgebraError("embedding: null field");
    }
    if (ext_->degree() % base_->degree() != 0) {
        throw AlgebraError("embedding: GF(2^" + std::to_string(base_->degree()) + ") is not a subfield of GF(2^" +
                           std::to_string(ext_->degree()) + ")");
    }
    gamma_ = least_root(base_->modulus(), ext_);
    powers_.resize(static_cast<std::size_t>(base_->degree()));
    Bits p = 1;
    for (auto& v : powers_) {
        v = p;
        p = ext_->mul(p, gamma_);
    }
}

FieldElem Embedding::operator()(const FieldElem& a) const
{
    require_same_field(*base_, *a.field());
    return ext_->elem(embed_bits(a.bits()));
}

}  // namespace apncert
