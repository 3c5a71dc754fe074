#pragma once

// File formats.
//
//   field: {"n": 8, "modulus": "0x11b"}            modulus optional
//   poly:  {"field": <field>, "coeffs": ["0x1", ...]}
//          coeffs[i] is the coefficient of x^i, so for deg f = m the
//          leading-first coefficient a_j is coeffs[m - j].
//   DDT CSV: header "alpha_hex,beta_hex,count", one row per nonzero count.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "apncert/gf2poly.hpp"

namespace apncert::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input; the message starts with the location (file, JSON
/// path, or CSV line).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

json field_to_json(const Field& F);
FieldPtr field_from_json(const json& j, const std::string& where);

json poly_to_json(const UPoly& f);
UPoly poly_from_json(const json& j, const std::string& where);

json read_json_file(const std::string& path);
UPoly read_poly_file(const std::string& path);

/// Accepts a path to a field JSON file, inline JSON text, or a bare degree n.
FieldPtr parse_field_arg(const std::string& arg);

std::string hex(Bits v);
Bits parse_elem(const Field& F, const std::string& text, const std::string& where);

struct DDTEntry {
    Bits alpha = 0;
    Bits beta = 0;
    std::uint64_t count = 0;
    friend bool operator==(const DDTEntry&, const DDTEntry&) = default;
};

void write_ddt_csv(std::ostream& out, const std::vector<DDTEntry>& rows);
std::vector<DDTEntry> read_ddt_csv(std::istream& in);

/// {"schema_version": 1, "kind": kind}
json envelope(const std::string& kind);

}  // namespace apncert::io
