#include "doctest.h"

#include "apncert/bounds.hpp"
#include "apncert/lalpha.hpp"
#include "apncert/rng.hpp"
#include "oracles.hpp"

using namespace apncert;

namespace {

// (L f)(x(x+a)) evaluated pointwise, for a check that never composes.
bool composition_pointwise(const UPoly& f, const UPoly& L, Bits a)
{
    const auto& F = *f.field();
    for (Bits x = 0; x <= F.max_element(); ++x) {
        const Bits t = F.mul(x, x ^ a);
        if (oracle::eval(L, t) != (oracle::eval(f, x ^ a) ^ oracle::eval(f, x))) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("lalpha")
{
    TEST_CASE("derivative hand examples")
    {
        const auto F = Field::make(8);
        const FieldElem a = F->elem(0x53);
        CHECK(d_alpha(UPoly::monomial(F, 1, 2), a) == UPoly::constant(F, a.pow(2).bits()));
        CHECK(d_alpha(UPoly::monomial(F, 1, 3), a) == UPoly(F, {a.pow(3).bits(), a.pow(2).bits(), a.bits()}));
        CHECK(d_alpha(UPoly::constant(F, 9), a).is_zero());
        CHECK_THROWS_AS(d_alpha(UPoly::x(F), F->zero()), AlgebraError);
    }

    TEST_CASE("L_alpha of x^12 and x^20")
    {
        const auto F = Field::make(10);
        for (Bits ab = 1; ab < 40; ++ab) {
            const FieldElem a = F->elem(ab);
            const UPoly L12 = l_alpha(UPoly::monomial(F, 1, 12), a).l_alpha_f;
            CHECK(L12 == UPoly::constant(F, a.pow(12).bits()) + UPoly::monomial(F, a.pow(4).bits(), 4));
            CHECK(l_alpha_monomial(12, a) == L12);
            const UPoly L20 = l_alpha(UPoly::monomial(F, 1, 20), a).l_alpha_f;
            CHECK(L20 == UPoly::constant(F, a.pow(20).bits()) + UPoly::monomial(F, a.pow(12).bits(), 4) +
                             UPoly::monomial(F, a.pow(4).bits(), 8));
            CHECK(l_alpha_monomial(20, a) == L20);
        }
        CHECK_THROWS_AS(l_alpha_monomial(28, F->one()), AlgebraError);
    }

    TEST_CASE("constant f and degree preconditions")
    {
        const auto F = Field::make(5);
        CHECK(l_alpha_poly(UPoly::constant(F, 7), F->elem(3)).is_zero());
        CHECK_THROWS_AS(l_alpha(random_poly(F, 10, 1), F->one()), AlgebraError);
        CHECK_THROWS_AS(l_alpha(random_poly(F, 12, 1), F->zero()), AlgebraError);
    }

    TEST_CASE("composition identity checked pointwise")
    {
        for (int n : {5, 7, 9}) {
            const auto F = Field::make(n);
            for (int m : {12, 20, 24}) {
                for (std::uint64_t s = 0; s < 5; ++s) {
                    const UPoly f = random_poly(F, m, s * 31 + static_cast<std::uint64_t>(n));
                    const Bits a = CounterStream(s, streams::alpha).nonzero_element(*F, static_cast<std::uint64_t>(m));
                    const auto B = l_alpha(f, F->elem(a));
                    CHECK(B.d == (m - 2) / 2);
                    CHECK(B.l_alpha_f.degree() == B.d);
                    CHECK(composition_pointwise(f, B.l_alpha_f, a));
                }
            }
        }
    }

    TEST_CASE("b0 and b1 closed forms")
    {
        const auto F = Field::make(12);
        for (int m : {12, 20, 24, 36, 40}) {
            for (std::uint64_t s = 0; s < 40; ++s) {
                const UPoly f = random_poly(F, m, s + 1000 * static_cast<std::uint64_t>(m));
                const FieldElem a = F->elem(CounterStream(s, streams::alpha).nonzero_element(*F, 0));
                const auto B = l_alpha(f, a);
                CHECK(B.b[0] == top_coeff(f, 1) * a);
                const FieldElem a0 = top_coeff(f, 0), a1 = top_coeff(f, 1), a2 = top_coeff(f, 2),
                                a3 = top_coeff(f, 3);
                FieldElem expect = a2 * a.pow(2) + a3 * a;
                if (m % 8 == 4) {
                    expect += a0 * a.pow(4) + a1 * a.pow(3);
                }
                CHECK(B.b[1] == expect);
                CHECK(b1_closed_form(f, a) == expect);
            }
        }
    }

    TEST_CASE("b1 vanishes when a2 = a3 = 0 and m = 0 mod 8")
    {
        const auto F = Field::make(9);
        const UPoly base = random_poly(F, 24, 5);
        std::vector<Bits> c(base.coeffs().begin(), base.coeffs().end());
        c[22] = 0;
        c[21] = 0;
        const UPoly f(F, c);
        CHECK(l_alpha(f, F->elem(17)).b[1].is_zero());
    }

    TEST_CASE("top coefficients are indexed from the leading term")
    {
        const auto F = Field::make(4);
        const UPoly f(F, {1, 2, 3, 4, 5});
        CHECK(top_coeff(f, 0).bits() == 5);
        CHECK(top_coeff(f, 1).bits() == 4);
        CHECK(top_coeff(f, 4).bits() == 1);
    }

    TEST_CASE("weighted scaling")
    {
        const auto F = Field::make(7);
        const UPoly f = random_poly(F, 12, 3);
        const Bits lam = 0x2b;
        const UPoly g = weighted_scale(f, lam);
        for (int j = 0; j <= 12; ++j) {
            CHECK(top_coeff(g, j) == F->elem(lam).pow(static_cast<std::uint64_t>(j)) * top_coeff(f, j));
        }
    }

    TEST_CASE("translation-invariance is required")
    {
        const auto F = Field::make(6);
        CHECK_THROWS_AS(solve_l_alpha(UPoly::x(F), 3), InvariantViolation);
    }
}
