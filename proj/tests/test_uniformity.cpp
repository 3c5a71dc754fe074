#include "doctest.h"

#include <cstdlib>

#include "apncert/report.hpp"
#include "apncert/rng.hpp"
#include "apncert/uniformity.hpp"
#include "oracles.hpp"

using namespace apncert;

TEST_SUITE("uniformity")
{
    TEST_CASE("small examples")
    {
        const auto F8 = Field::make(3);
        const UPoly cube = UPoly::monomial(F8, 1, 3);
        const auto row = ddt_row(cube, F8->one());
        for (auto c : row.counts) {
            CHECK((c == 0 || c == 2));
        }
        CHECK(delta_exhaustive(cube).delta == 2);
        CHECK(oracle::delta(cube) == 2);

        const auto F = Field::make(5);
        const auto sq = ddt_row(UPoly::monomial(F, 1, 2), F->elem(7));
        CHECK(sq.max_count == 32);
        CHECK(sq.counts[F->sqr(7)] == 32);

        const UPoly additive(F, {9, 3, 1, 0, 5});
        CHECK(delta_exhaustive(additive).delta == 32);
    }

    TEST_CASE("rows are even and sum to the field size")
    {
        for (int n : {6, 9, 12}) {
            const auto F = Field::make(n);
            const UPoly f = random_poly(F, 12, static_cast<std::uint64_t>(n));
            const auto table = value_table(f);
            for (Bits a = 1; a <= F->max_element(); a += 1 + a / 3) {
                const auto row = ddt_row(table, a);
                std::uint64_t sum = 0;
                for (auto c : row.counts) {
                    CHECK(c % 2 == 0);
                    sum += c;
                }
                CHECK(sum == F->max_element() + 1);
                CHECK(row.max_count <= 10);
            }
        }
    }

    TEST_CASE("delta against direct evaluation, with invariances")
    {
        for (int n = 4; n <= 9; ++n) {
            const auto F = Field::make(n);
            const UPoly f = random_poly(F, 12, 40 + static_cast<std::uint64_t>(n));
            const auto r = delta_exhaustive(f);
            CHECK(r.delta == oracle::delta(f));
            CHECK(r.delta <= 10);
            CHECK(delta_exhaustive(add_constant(f, 3)).delta == r.delta);
            const UPoly shifted = compose(f, UPoly(F, {5 & F->mask(), 1}));
            CHECK(delta_exhaustive(shifted).delta == r.delta);
            CHECK(r.witness_total >= r.witnesses.size());
            for (const auto& [a, b] : r.witnesses) {
                CHECK(oracle::ddt_entry(f, a, b) == r.delta);
            }
        }
    }

    TEST_CASE("witness list is capped")
    {
        const auto F6 = Field::make(6);
        const auto small = delta_exhaustive(UPoly(F6, {1, 0, 1}));
        CHECK(small.delta == 64);
        CHECK(small.witnesses.size() == 63);
        CHECK(small.witness_total == 63);
        const auto F7 = Field::make(7);
        const auto r = delta_exhaustive(UPoly(F7, {1, 0, 1}));
        CHECK(r.delta == 128);
        CHECK(r.witnesses.size() == DeltaResult::kWitnessCap);
        CHECK(r.witness_total == 127);
    }

    TEST_CASE("solutions_count against the DDT")
    {
        const auto F = Field::make(8);
        for (int m : {12, 20}) {
            const UPoly f = random_poly(F, m, static_cast<std::uint64_t>(m));
            const auto table = value_table(f);
            for (Bits a = 1; a <= F->max_element(); a += 5) {
                const auto row = ddt_row(table, a);
                for (Bits b = 0; b <= F->max_element(); ++b) {
                    REQUIRE(solutions_count(f, F->elem(a), F->elem(b)) == row.counts[b]);
                }
            }
        }
        const auto F28 = Field::make(28);
        const UPoly g = random_poly(F28, 12, 1);
        CHECK(solutions_count(g, F28->elem(3), F28->elem(0x1234567)) <= 10);
    }

    TEST_CASE("certificate is valid, parallel equals serial, and threads do not matter")
    {
        const auto F = Field::make(20);
        const UPoly f = random_poly(F, 12, 2024);
        const CertifyOptions opt{100000, 5, 4096};
        const auto serial = certify_max_serial(f, opt);
        REQUIRE(serial.status == CertifyResult::Status::certified);
        const auto& w = *serial.witness;
        CHECK(w.root_count == 10);
        CHECK(solutions_count(f, w.alpha, w.beta) == 10);
        CHECK(is_squarefree(add_constant(d_alpha(f, w.alpha), w.beta.bits())));
        CHECK(d_alpha(f, w.alpha)(w.x0) == w.beta);
        CHECK(w.morse_report.morse);
        CHECK(w.morse_report.cond_II);
        CHECK(serial.note.find("exploratory") != std::string::npos);
        const std::string ref = io::to_json(serial).dump();
        for (const char* threads : {"1", "2", "5"}) {
            setenv("APNCERT_THREADS", threads, 1);
            CHECK(io::to_json(certify_max(f, opt)).dump() == ref);
            CHECK(io::to_json(delta_exhaustive(random_poly(Field::make(9), 12, 3))).dump() ==
                  io::to_json(delta_exhaustive_serial(random_poly(Field::make(9), 12, 3))).dump());
        }
        unsetenv("APNCERT_THREADS");
    }

    TEST_CASE("budget exhaustion is inconclusive")
    {
        const auto F = Field::make(28);
        const auto r = certify_max(random_poly(F, 12, 8), {1, 8, 4096});
        if (r.status == CertifyResult::Status::inconclusive) {
            CHECK_FALSE(r.witness.has_value());
            CHECK(r.beta_trials == 1);
        } else {
            CHECK(r.beta_trials == 1);
        }
        const auto none = certify_max(random_poly(F, 12, 8), {0, 8, 4096});
        CHECK(none.status == CertifyResult::Status::inconclusive);
    }

    TEST_CASE("preconditions")
    {
        const auto F = Field::make(10);
        CHECK_THROWS_AS(certify_max(random_poly(F, 16, 1), {10, 1, 10}), std::invalid_argument);
        const UPoly base = random_poly(F, 12, 1);
        std::vector<Bits> c(base.coeffs().begin(), base.coeffs().end());
        c[11] = 0;
        CHECK_THROWS_AS(certify_max(UPoly(F, c), {10, 1, 10}), std::invalid_argument);
        CHECK_THROWS(delta_exhaustive(random_poly(Field::make(15), 12, 1)));
    }
}
