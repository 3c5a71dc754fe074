#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "apncert/degstruct.hpp"
#include "apncert/lalpha.hpp"
#include "apncert/numtheory.hpp"
#include "oracles.hpp"

using namespace apncert;

TEST_SUITE("degstruct")
{
    TEST_CASE("trace polynomials")
    {
        const auto F2 = Field::make(1);
        CHECK(trace_poly(1) == UPoly::x(F2));
        CHECK(trace_poly(2) == UPoly(F2, {0, 1, 1}));
        CHECK(trace_poly(2).eval(0) == 0);
        CHECK(trace_poly(2).eval(1) == 0);
        CHECK_THROWS(trace_poly(0));
        const auto F = Field::make(12);
        for (Bits x = 1; x < 300; x += 7) {
            for (int k : {1, 3, 6, 12}) {
                const Bits y = (x * 2654435761ULL) & F->mask();
                const FieldElem px = trace_poly_eval(k, F->elem(x));
                CHECK(trace_poly_eval(k, F->elem(x ^ y)) == px + trace_poly_eval(k, F->elem(y)));
                CHECK(px.bits() == oracle::eval(lift_binary(trace_poly(k), F), x));
            }
            CHECK(trace_poly_eval(12, F->elem(x)).bits() == static_cast<Bits>(F->trace(x)));
        }
    }

    TEST_CASE("gcd lemma")
    {
        CHECK(gcd_lemma_check(2, 1).gcd_value == 1);
        CHECK(gcd_lemma_check(2, 2).gcd_value == 3);
        const auto g33 = gcd_lemma_check(3, 3);
        CHECK(g33.gcd_value == 7);
        CHECK_FALSE(g33.expected.has_value());
        CHECK(g33.holds());
        for (int r = 2; r <= 12; ++r) {
            for (int l = 1; l <= 12; ++l) {
                const std::uint64_t m = (1ULL << r) * ((1ULL << l) + 1);
                const std::uint64_t d = (m - 2) / 2;
                const std::uint64_t g = std::gcd(d, (1ULL << (2 * l)) - 1);
                const auto rl = std::gcd(r, l);
                const auto res = gcd_lemma_check(r, l);
                CHECK(res.d == d);
                CHECK(res.gcd_value == g);
                if (rl == 1) {
                    CHECK(g == 1);
                } else if (rl == 2) {
                    CHECK(g == 3);
                }
            }
        }
    }

    TEST_CASE("closed form of L_1(x^(m-1)) by direct expansion")
    {
        const auto F2 = Field::make(1);
        for (int r = 2; r <= 5; ++r) {
            for (int l = 1; l <= 4; ++l) {
                const std::size_t m = (std::size_t{1} << r) * ((std::size_t{1} << l) + 1);
                const UPoly L = monomial_L1_closed_form(r, l);
                CHECK(L.degree() == static_cast<int>((m - 2) / 2));
                CHECK(L.degree() == (1 << (r + l - 1)) + (1 << (r - 1)) - 1);
                // (x+1)^(m-1) + x^(m-1) from Lucas' theorem, independently of compose()
                std::vector<Bits> rhs(m - 1, 0);
                for (std::size_t k = 0; k + 1 < m; ++k) {
                    rhs[k] = ((k & (m - 1)) == k) ? 1 : 0;
                }
                const UPoly expected(F2, rhs);
                const UPoly T(F2, {0, 1, 1});
                CHECK(compose(L, T) == expected);
                CHECK(monomial_L1_identity(r, l));
                CHECK(L == l_alpha_poly(UPoly::monomial(F2, 1, m - 1), F2->one()));
            }
        }
    }

    TEST_CASE("derivative identity, including a perturbation sanity check")
    {
        for (int r = 2; r <= 6; ++r) {
            for (int l = 1; l <= 6; ++l) {
                CHECK(derivative_identity_check(r, l));
            }
        }
        const auto F2 = Field::make(1);
        const UPoly L = monomial_L1_closed_form(2, 1);
        const UPoly lhs = UPoly::monomial(F2, 1, 2) * formal_derivative(L);
        const UPoly perturbed = lhs + UPoly::monomial(F2, 1, 3);
        CHECK_FALSE(perturbed == lhs);
    }

    TEST_CASE("root system for (2, 1)")
    {
        const auto sys = monomial_root_system(2, 1);
        CHECK(sys.d == 5);
        CHECK(sys.N == 4);
        CHECK(sys.field->degree() == 4);
        REQUIRE(sys.taus.size() == 2);
        const UPoly dL = lift_binary(formal_derivative(monomial_L1_closed_form(2, 1)), sys.field);
        CHECK(dL.degree() == 4);
        for (const auto& t : sys.taus) {
            CHECK(oracle::eval(dL, t.bits()) == 0);
            CHECK_FALSE(t.is_zero());
        }
        CHECK(sys.taus[0] != sys.taus[1]);
        CHECK(sys.p_r_minus_1_nonzero);
    }

    TEST_CASE("root systems across the feasible grid")
    {
        for (int r = 2; r <= 6; ++r) {
            for (int l = 1; l <= 6; ++l) {
                const auto N = splitting_degree_of(r, l);
                const std::uint64_t d = ((1ULL << r) * ((1ULL << l) + 1) - 2) / 2;
                CHECK(N == nt::order_of_two(d));
                if (N > 64) {
                    CHECK_THROWS_AS(monomial_root_system(r, l), AlgebraError);
                    continue;
                }
                const auto sys = monomial_root_system(r, l);
                CHECK(sys.taus.size() == (d - 1) / 2);
                CHECK(sys.taus_are_roots);
                CHECK(sys.p_r_minus_1_nonzero);
                for (std::size_t i = 0; i < sys.thetas.size(); ++i) {
                    CHECK(sys.thetas[i].pow(d).is_one());
                    CHECK_FALSE(sys.thetas[i].is_one());
                    for (std::size_t j = i + 1; j < sys.thetas.size(); ++j) {
                        CHECK_FALSE((sys.thetas[i] * sys.thetas[j]).is_one());
                        CHECK(sys.taus[i] != sys.taus[j]);
                    }
                }
                // Frobenius closure: the tau set is stable under squaring
                std::vector<Bits> ts;
                for (const auto& t : sys.taus) {
                    ts.push_back(t.bits());
                }
                std::sort(ts.begin(), ts.end());
                for (const auto& t : sys.taus) {
                    CHECK(std::binary_search(ts.begin(), ts.end(), t.square().bits()));
                }
            }
        }
    }

    TEST_CASE("vanishing pairs follow gcd(r, l)")
    {
        CHECK(vanishing_pairs_check(2, 1).vanishing_pairs.empty());
        CHECK(vanishing_pairs_check(2, 2).vanishing_pairs.empty());
        CHECK(vanishing_pairs_check(3, 1).vanishing_pairs.empty());
        CHECK_FALSE(vanishing_pairs_check(3, 3).vanishing_pairs.empty());
        CHECK_FALSE(vanishing_pairs_check(4, 4).vanishing_pairs.empty());
        for (const auto& rep : structure_grid(6, 6)) {
            CHECK_MESSAGE(rep.ok(), "r=" << rep.r << " l=" << rep.ell);
            if (rep.feasible) {
                CHECK(rep.vanishing->agrees());
                CHECK(rep.vanishing->expected == (std::gcd(rep.r, rep.ell) <= 2));
            }
        }
    }

    TEST_CASE("ratio chain")
    {
        const auto a = ratio_chain_check(2, 1);
        CHECK(a.pairs_checked == 0);
        CHECK(a.holds);
        const auto b = ratio_chain_check(3, 3);
        CHECK(b.pairs_checked > 0);
        CHECK(b.holds);
        const auto c = ratio_chain_check(6, 3);
        CHECK(c.pairs_checked > 0);
        CHECK(c.holds);
    }

    TEST_CASE("taus match an exhaustive root scan")
    {
        for (int r = 2; r <= 6; ++r) {
            for (int l = 1; l <= 6; ++l) {
                if (splitting_degree_of(r, l) > 20) {
                    continue;
                }
                const auto sys = monomial_root_system(r, l);
                const UPoly s = lift_binary(sqrt_even(formal_derivative(monomial_L1_closed_form(r, l))), sys.field);
                std::vector<Bits> taus;
                for (const auto& t : sys.taus) {
                    taus.push_back(t.bits());
                }
                std::sort(taus.begin(), taus.end());
                CHECK(oracle::roots(s) == taus);
            }
        }
    }
}
