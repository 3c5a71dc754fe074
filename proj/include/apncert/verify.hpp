#pragma once

// Re-checks of the structural claims at pinned desk-scale parameters.
// Reports are deterministic given (suite, tier, seed).

#include <cstdint>
#include <string>
#include <vector>

#include "apncert/io.hpp"

namespace apncert {

enum class Tier { fast, standard, slow };
enum class ClaimStatus { pass, fail, infeasible };

struct Claim {
    std::string id;
    std::string anchor;
    ClaimStatus status = ClaimStatus::fail;
    std::string details;
};

struct VerifyReport {
    std::string suite;
    Tier tier = Tier::fast;
    std::uint64_t seed = 0;
    std::vector<Claim> claims;

    bool passed() const noexcept;
};

const std::vector<std::string>& verify_suites();  // without "all"

/// suite is one of verify_suites() or "all". Throws std::invalid_argument
/// for an unknown suite.
VerifyReport run_verify(const std::string& suite, Tier tier, std::uint64_t seed);

Tier parse_tier(const std::string& s);
std::string to_string(Tier t);
std::string to_string(ClaimStatus s);

namespace io {
json to_json(const VerifyReport& r);
}

}  // namespace apncert
