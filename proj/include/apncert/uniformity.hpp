#pragma once

// Differential uniformity: DDT rows, exhaustive delta, root counting for
// single (alpha, beta), and the constructive certificate that
// delta(f) = m - 2.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apncert/morsecert.hpp"

namespace apncert {

struct DDTRow {
    Bits alpha = 0;
    std::vector<std::uint32_t> counts;  // indexed by beta
    std::uint32_t max_count = 0;
};

/// Values f(x) for every x in the field (2^n <= 2^24).
std::vector<Bits> value_table(const UPoly& f);

DDTRow ddt_row(const UPoly& f, const FieldElem& alpha);
DDTRow ddt_row(const std::vector<Bits>& table, Bits alpha);

struct DeltaResult {
    std::uint64_t delta = 0;
    std::vector<std::pair<Bits, Bits>> witnesses;  // first kWitnessCap in (alpha, beta) order
    std::uint64_t witness_total = 0;
    static constexpr std::size_t kWitnessCap = 64;
};

/// OpenMP-parallel over alpha; identical to delta_exhaustive_serial.
DeltaResult delta_exhaustive(const UPoly& f);
DeltaResult delta_exhaustive_serial(const UPoly& f);

/// #{x : D_alpha f(x) = beta} via deg gcd(D_alpha f + beta, x^{2^n} - x);
/// 2^n when D_alpha f + beta vanishes identically.
std::uint64_t solutions_count(const UPoly& f, const FieldElem& alpha, const FieldElem& beta);

struct CertWitness {
    int n = 0;
    UPoly f;
    FieldElem alpha;
    FieldElem beta;
    FieldElem x0;  // beta = D_alpha f(x0)
    std::uint64_t root_count = 0;
    MorseReport morse_report;
};

struct CertifyOptions {
    std::uint64_t budget = 1000000;  // beta trials
    std::uint64_t seed = 0;
    std::uint64_t alpha_tries = 4096;
};

struct CertifyResult {
    enum class Status { certified, inconclusive };
    Status status = Status::inconclusive;
    std::optional<CertWitness> witness;
    std::uint64_t alpha_trials = 0;
    std::uint64_t beta_trials = 0;
    std::string note;
};

/// Requires an admissible degree and a1 != 0. The beta search is
/// OpenMP-parallel in chunks; the lowest-index success wins, so the result
/// equals certify_max_serial.
CertifyResult certify_max(const UPoly& f, const CertifyOptions& opt);
CertifyResult certify_max_serial(const UPoly& f, const CertifyOptions& opt);

}  // namespace apncert
