#include "doctest.h"

#include <algorithm>
#include <cstdlib>

#include "apncert/morsecert.hpp"
#include "apncert/numtheory.hpp"
#include "apncert/rng.hpp"
#include "apncert/report.hpp"
#include "oracles.hpp"

using namespace apncert;

namespace {

struct Extension {
    FieldPtr field;
    Embedding emb;
};

Extension splitting_extension(const UPoly& squarefree)
{
    const auto base = squarefree.field();
    const auto k = static_cast<int>(splitting_degree(squarefree));
    const auto ext = Field::make(base->degree() * k);
    return {ext, Embedding(base, ext)};
}

// Adjusts two low coefficients of f so that tau becomes a common root of
// D' and D^[2] for D = D_alpha f, which makes alpha degenerate.
UPoly with_degenerate_alpha(const UPoly& f, const FieldElem& alpha, const FieldElem& tau)
{
    const auto F = f.field();
    auto conditions = [&](const UPoly& g) {
        const UPoly D = d_alpha(g, alpha);
        return std::pair{formal_derivative(D)(tau), hasse2(D)(tau)};
    };
    const auto [r1, r2] = conditions(f);
    for (int k1 = 2; k1 < f.degree() - 3; ++k1) {
        for (int k2 = k1 + 1; k2 < f.degree() - 3; ++k2) {
            const auto [p1, p2] = conditions(UPoly::monomial(F, 1, static_cast<std::size_t>(k1)));
            const auto [q1, q2] = conditions(UPoly::monomial(F, 1, static_cast<std::size_t>(k2)));
            const FieldElem det = p1 * q2 + p2 * q1;
            if (det.is_zero()) {
                continue;
            }
            const FieldElem c1 = (r1 * q2 + r2 * q1) / det;
            const FieldElem c2 = (p1 * r2 + p2 * r1) / det;
            return f + UPoly::monomial(F, c1.bits(), static_cast<std::size_t>(k1)) +
                   UPoly::monomial(F, c2.bits(), static_cast<std::size_t>(k2));
        }
    }
    throw std::logic_error("no adjustable coefficient pair");
}

}  // namespace

TEST_SUITE("morsecert")
{
    TEST_CASE("nondegeneracy agrees with a common-root search in the splitting field")
    {
        for (int n : {3, 4, 5, 6}) {
            const auto F = Field::make(n);
            const UPoly f = UPoly::monomial(F, 1, 12) + UPoly::monomial(F, 1, 11) + UPoly::monomial(F, 1, 3);
            for (Bits a = 1; a <= F->max_element(); ++a) {
                const auto B = l_alpha(f, F->elem(a));
                const UPoly dp = formal_derivative(B.d_alpha_f);
                const UPoly h2 = hasse2(B.d_alpha_f);
                const UPoly sq = squarefree_part(dp);
                if (static_cast<int>(splitting_degree(sq)) * n > 24) {
                    continue;
                }
                const auto ext = splitting_extension(sq);
                const UPoly h2e = embed_poly(ext.emb, h2);
                bool common = false;
                for (Bits z : roots_in_field(embed_poly(ext.emb, sq))) {
                    common = common || oracle::eval(h2e, z) == 0;
                }
                REQUIRE_MESSAGE(check_Ia(B).first == !common, "n=" << n << " alpha=" << a);
            }
        }
    }

    TEST_CASE("resultant path agrees with the gcd path")
    {
        const auto F = Field::make(8);
        std::uint64_t degenerate = 0;
        for (std::uint64_t t = 0; t < 1000; ++t) {
            const UPoly f = random_poly(F, 12, t);
            const FieldElem a = F->elem(CounterStream(t, streams::alpha).nonzero_element(*F, 0));
            const auto B = l_alpha(f, a);
            const auto [ok, value] = check_Ia(B);
            REQUIRE(ok == check_Ia_via_gcd(B));
            REQUIRE(ok == !value.is_zero());
            degenerate += ok ? 0 : 1;
        }
        CHECK(degenerate < 1000);
    }

    TEST_CASE("a built degenerate alpha is detected")
    {
        const auto F = Field::make(10);
        for (std::uint64_t t = 0; t < 20; ++t) {
            const FieldElem a = F->elem(CounterStream(t, streams::alpha).nonzero_element(*F, 0));
            const FieldElem tau = F->elem(CounterStream(t, streams::beta).nonzero_element(*F, 0));
            const UPoly f = with_degenerate_alpha(random_poly(F, 12, t), a, tau);
            const auto B = l_alpha(f, a);
            REQUIRE(formal_derivative(B.d_alpha_f)(tau).is_zero());
            REQUIRE(hasse2(B.d_alpha_f)(tau).is_zero());
            CHECK_FALSE(check_Ia(B).first);
            CHECK_FALSE(check_Ia_via_gcd(B));
            const auto R = morse_report(B);
            CHECK_FALSE(R.pi_value.has_value());
            CHECK_FALSE(R.morse);
        }
    }

    TEST_CASE("critical value polynomial")
    {
        const auto F = Field::make(8);
        CHECK(critical_value_poly(UPoly::monomial(F, 1, 3), true) == UPoly::x(F));
        const UPoly cubic = UPoly::monomial(F, 1, 3) + UPoly::x(F);
        CHECK(critical_value_poly(cubic, true) == UPoly::x(F));
        CHECK(pi_d(cubic).is_one());
        CHECK_THROWS_AS(pi_d(UPoly::monomial(F, 1, 3)), AlgebraError);
        for (std::uint64_t t = 0; t < 50; ++t) {
            const UPoly g = random_poly(F, 5, 500 + t);
            const UPoly s = sqrt_even(formal_derivative(g));
            if (!is_squarefree(s)) {
                continue;
            }
            const UPoly c = critical_value_poly(g, true);
            REQUIRE(c.is_monic());
            REQUIRE(c.degree() == 2);
            const auto ext = splitting_extension(s);
            const UPoly ge = embed_poly(ext.emb, g);
            std::vector<Bits> values;
            for (Bits tau : roots_in_field(embed_poly(ext.emb, s))) {
                values.push_back(oracle::eval(ge, tau));
            }
            REQUIRE(values.size() == 2);
            const UPoly ce = embed_poly(ext.emb, c);
            for (Bits v : values) {
                CHECK(oracle::eval(ce, v) == 0);
            }
            const Bits diff = values[0] ^ values[1];
            CHECK(ext.emb.embed_bits(pi_d(g).bits()) == ext.field->sqr(diff));
        }
    }

    TEST_CASE("equal critical values give zero")
    {
        const auto F = Field::make(8);
        for (Bits t1 = 1; t1 < 30; ++t1) {
            const Bits t2 = t1 ^ 0x5a;
            const Bits p = F->sqr(t1) ^ F->sqr(t2);
            const Bits q = F->mul(F->sqr(t1), F->sqr(t2));
            const UPoly base(F, {0x11, q, 0, p, 0, 1});
            const Bits gap = base.eval(t1) ^ base.eval(t2);
            const UPoly g = base + UPoly::monomial(F, F->div(gap, F->pow(t1 ^ t2, 4)), 4);
            REQUIRE(g.eval(t1) == g.eval(t2));
            CHECK(nondegenerate_critical_points(g));
            CHECK(pi_d(g).is_zero());
        }
    }

    TEST_CASE("report invariants")
    {
        const auto F = Field::make(9);
        for (std::uint64_t t = 0; t < 300; ++t) {
            const int m = t % 2 ? 12 : 24;
            const UPoly f = random_poly(F, m, t);
            const FieldElem a = F->elem(CounterStream(t, streams::alpha).nonzero_element(*F, 0));
            const auto B = l_alpha(f, a);
            const auto R = morse_report(B);
            CHECK(R.cond_Ic);
            CHECK(R.cond_Ia == R.pi_value.has_value());
            if (R.cond_Ib) {
                CHECK_FALSE(R.pi_value->is_zero());
            }
            if (R.cond_Ia) {
                CHECK(R.cond_Ib == !R.pi_value->is_zero());
            }
            CHECK(R.cond_II == R.witness_x.has_value());
            if (R.witness_x) {
                const FieldElem x = *R.witness_x;
                CHECK(x * x + a * x == B.b[1] / B.b[0]);
            }
            CHECK(R.cond_II == ((B.b[1] / (B.b[0] * a * a)).trace() == 0));
        }
    }

    TEST_CASE("critical points of D_alpha f pair up over those of L_alpha f")
    {
        const auto F = Field::make(4);
        for (std::uint64_t t = 0; t < 30; ++t) {
            const UPoly f = random_poly(F, 12, t);
            const FieldElem a = F->elem(CounterStream(t, streams::alpha).nonzero_element(*F, 0));
            const auto B = l_alpha(f, a);
            if (!check_Ia(B).first) {
                continue;
            }
            const UPoly sD = sqrt_even(formal_derivative(B.d_alpha_f));
            const UPoly sL = sqrt_even(formal_derivative(B.l_alpha_f));
            const std::uint64_t k = nt::lcm(splitting_degree(squarefree_part(sD)), splitting_degree(squarefree_part(sL)));
            const auto E = Field::make(4 * static_cast<int>(k));
            const Embedding emb(F, E);
            CHECK(roots_in_field(embed_poly(emb, sD)).size() == 2 * roots_in_field(embed_poly(emb, sL)).size());
        }
    }

    TEST_CASE("trace condition holds everywhere in the degenerate m = 0 mod 8 case")
    {
        const auto F = Field::make(7);
        const UPoly base = random_poly(F, 24, 77);
        std::vector<Bits> c(base.coeffs().begin(), base.coeffs().end());
        c[21] = c[21] == 0 ? 1 : c[21];
        c[22] = F->sqrt(F->mul(c[23], c[21]));
        const UPoly f(F, c);
        CHECK(trace_condition_count(f) == F->max_element());
    }

    TEST_CASE("scan bounds and parallel determinism")
    {
        const auto F = Field::make(11);
        const UPoly f = random_poly(F, 12, 4);
        const auto serial = alpha_scan_serial(f, {});
        CHECK(serial.bounds_ok());
        CHECK(serial.scanned == F->max_element());
        CHECK(serial.fail_Ia <= 88);
        CHECK(serial.fail_Ib <= 29);
        CHECK(serial.certified > 0);
        const std::string ref = io::to_json(serial).dump();
        for (const char* threads : {"1", "3", "8"}) {
            setenv("APNCERT_THREADS", threads, 1);
            CHECK(io::to_json(alpha_scan(f, {})).dump() == ref);
            const auto sampled = alpha_scan(f, {false, 300, 9});
            CHECK(io::to_json(sampled).dump() == io::to_json(alpha_scan_serial(f, {false, 300, 9})).dump());
        }
        unsetenv("APNCERT_THREADS");
    }

    TEST_CASE("degree interpolation helpers")
    {
        const auto r = interp_resultant_degree(12, Field::make(7), 3);
        CHECK(r.degree <= 88);
        CHECK(r.bound == 88);
        const auto p = interp_pi_degree(12, Field::make(7), 3);
        CHECK(p.degree == 29);
        CHECK(p.leading == *p.predicted_leading);
        CHECK(e_of_d(5) == 1);
        CHECK(e_of_d(9) == 6);
        CHECK(e_of_d(3) == 0);
        CHECK_THROWS(interp_resultant_degree(12, Field::make(6), 1));
    }
}
