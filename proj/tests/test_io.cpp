#include "doctest.h"

#include <sstream>

#include "apncert/io.hpp"
#include "apncert/report.hpp"
#include "apncert/rng.hpp"
#include "apncert/uniformity.hpp"
#include "apncert/verify.hpp"

using namespace apncert;

TEST_SUITE("io")
{
    TEST_CASE("field and polynomial JSON round-trip")
    {
        const auto F = Field::make(8, 0x11d);
        const auto back = io::field_from_json(io::field_to_json(*F), "test");
        CHECK(back->same_as(*F));
        const UPoly f = random_poly(F, 12, 5);
        CHECK(io::poly_from_json(io::poly_to_json(f), "test") == f);
        CHECK(io::parse_field_arg("9")->degree() == 9);
        CHECK(io::parse_field_arg(R"({"n": 8, "modulus": "0x11d"})")->same_as(*F));
    }

    TEST_CASE("malformed input names its location")
    {
        const io::json bad_coeff = io::json::parse(R"({"field": {"n": 4}, "coeffs": ["0x1", "0x1f"]})");
        try {
            io::poly_from_json(bad_coeff, "poly.json");
            FAIL("expected an error");
        } catch (const io::InputError& e) {
            CHECK(std::string(e.what()).find("poly.json") != std::string::npos);
            CHECK(std::string(e.what()).find("coeffs[1]") != std::string::npos);
        }
        CHECK_THROWS_AS(io::field_from_json(io::json::parse(R"({"n": 3, "modulus": "0x9"})"), "f"), std::invalid_argument);
        CHECK_THROWS_AS(io::field_from_json(io::json::parse(R"({"n": 0})"), "f"), std::invalid_argument);
        CHECK_THROWS_AS(io::read_poly_file("/nonexistent/poly.json"), io::InputError);
        CHECK_THROWS_AS(io::parse_field_arg("{not json"), std::invalid_argument);
    }

    TEST_CASE("DDT CSV round-trip")
    {
        const auto F = Field::make(5);
        const UPoly f = random_poly(F, 12, 2);
        const auto table = value_table(f);
        std::vector<io::DDTEntry> rows;
        for (Bits a = 1; a <= F->max_element(); ++a) {
            const auto row = ddt_row(table, a);
            for (Bits b = 0; b <= F->max_element(); ++b) {
                if (row.counts[b] != 0) {
                    rows.push_back({a, b, row.counts[b]});
                }
            }
        }
        std::stringstream ss;
        io::write_ddt_csv(ss, rows);
        std::string header;
        std::getline(std::istringstream(ss.str()) >> std::ws, header);
        CHECK(header == "alpha_hex,beta_hex,count");
        CHECK(io::read_ddt_csv(ss) == rows);

        std::istringstream bad("alpha_hex,beta_hex,count\n0x1,0x2,4\n0x3,zz,2\n");
        try {
            io::read_ddt_csv(bad);
            FAIL("expected an error");
        } catch (const io::InputError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        std::istringstream wrong_header("a,b,c\n");
        CHECK_THROWS_AS(io::read_ddt_csv(wrong_header), io::InputError);
    }

    TEST_CASE("every report carries the schema version")
    {
        const auto env = io::envelope("x");
        CHECK(env["schema_version"] == io::kSchemaVersion);
        const auto rep = run_verify("bounds", Tier::fast, 1);
        const auto j = io::to_json(rep);
        CHECK(j["schema_version"] == 1);
        CHECK(j["overall"] == "pass");
    }

    TEST_CASE("verify reports are deterministic and anchored")
    {
        const std::string a = io::to_json(run_verify("all", Tier::fast, 11)).dump();
        const std::string b = io::to_json(run_verify("all", Tier::fast, 11)).dump();
        CHECK(a == b);
        const auto rep = run_verify("bounds", Tier::fast, 3);
        bool n1 = false, n2 = false;
        for (const auto& c : rep.claims) {
            CHECK_FALSE(c.anchor.empty());
            n1 = n1 || c.details.find("n1(12)=9") != std::string::npos;
            n2 = n2 || c.details.find("n2(12)=28") != std::string::npos;
        }
        CHECK(n1);
        CHECK(n2);
        CHECK_THROWS_AS(run_verify("nope", Tier::fast, 1), std::invalid_argument);
        CHECK_THROWS_AS(parse_tier("medium"), std::invalid_argument);
    }
}
