#include "apncert/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace apncert::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw InputError(where + ": " + what);
}

}  // namespace

std::string hex(Bits v)
{
    return to_hex(static_cast<ModulusBits>(v));
}

json field_to_json(const Field& F)
{
    json j;
    j["n"] = F.degree();
    j["modulus"] = to_hex(F.modulus());
    return j;
}

FieldPtr field_from_json(const json& j, const std::string& where)
{
    if (!j.is_object()) {
        fail(where, "field must be an object");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        fail(where + ".n", "missing or not an integer");
    }
    const auto n = j["n"].get<std::int64_t>();
    if (n < 1 || n > 64) {
        fail(where + ".n", "degree " + std::to_string(n) + " outside 1..64");
    }
    std::optional<ModulusBits> modulus;
    if (j.contains("modulus") && !j["modulus"].is_null()) {
        if (!j["modulus"].is_string()) {
            fail(where + ".modulus", "must be a hex string");
        }
        try {
            modulus = parse_hex(j["modulus"].get<std::string>());
        } catch (const AlgebraError& e) {
            fail(where + ".modulus", e.what());
        }
    }
    try {
        return field_new(static_cast<int>(n), modulus);
    } catch (const AlgebraError& e) {
        fail(where, e.what());
    }
}

json poly_to_json(const UPoly& f)
{
    json j;
    j["field"] = field_to_json(*f.field());
    json c = json::array();
    for (Bits b : f.coeffs()) {
        c.push_back(hex(b));
    }
    j["coeffs"] = std::move(c);
    return j;
}

Bits parse_elem(const Field& F, const std::string& text, const std::string& where)
{
    ModulusBits v = 0;
    try {
        v = parse_hex(text);
    } catch (const AlgebraError& e) {
        fail(where, e.what());
    }
    if (v > F.mask()) {
        fail(where, "value " + text + " is not an element of GF(2^" + std::to_string(F.degree()) + ")");
    }
    return static_cast<Bits>(v);
}

UPoly poly_from_json(const json& j, const std::string& where)
{
    if (!j.is_object()) {
        fail(where, "polynomial must be an object");
    }
    if (!j.contains("field")) {
        fail(where + ".field", "missing");
    }
    FieldPtr F = field_from_json(j["field"], where + ".field");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
        fail(where + ".coeffs", "missing or not an array");
    }
    std::vector<Bits> c;
    const auto& arr = j["coeffs"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string at = where + ".coeffs[" + std::to_string(i) + "]";
        if (!arr[i].is_string()) {
            fail(at, "must be a hex string");
        }
        c.push_back(parse_elem(*F, arr[i].get<std::string>(), at));
    }
    return UPoly(std::move(F), std::move(c));
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        fail(path, "cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path, e.what());
    }
}

UPoly read_poly_file(const std::string& path)
{
    return poly_from_json(read_json_file(path), path);
}

FieldPtr parse_field_arg(const std::string& arg)
{
    if (!arg.empty() && arg.find_first_not_of("0123456789") == std::string::npos) {
        int n = 0;
        std::from_chars(arg.data(), arg.data() + arg.size(), n);
        return field_from_json(json{{"n", n}}, "--field");
    }
    if (!arg.empty() && arg.front() == '{') {
        try {
            return field_from_json(json::parse(arg), "--field");
        } catch (const json::parse_error& e) {
            fail("--field", e.what());
        }
    }
    return field_from_json(read_json_file(arg), arg);
}

void write_ddt_csv(std::ostream& out, const std::vector<DDTEntry>& rows)
{
    out << "alpha_hex,beta_hex,count\n";
    for (const auto& r : rows) {
        out << hex(r.alpha) << ',' << hex(r.beta) << ',' << r.count << '\n';
    }
}

std::vector<DDTEntry> read_ddt_csv(std::istream& in)
{
    std::vector<DDTEntry> rows;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line) || line != "alpha_hex,beta_hex,count") {
        fail("csv line 1", "expected header alpha_hex,beta_hex,count");
    }
    ++lineno;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const std::string where = "csv line " + std::to_string(lineno);
        std::stringstream ss(line);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c) ||
            c.find(',') != std::string::npos) {
            fail(where, "expected three fields");
        }
        DDTEntry e;
        try {
            e.alpha = static_cast<Bits>(parse_hex(a));
            e.beta = static_cast<Bits>(parse_hex(b));
        } catch (const AlgebraError& err) {
            fail(where, err.what());
        }
        const auto res = std::from_chars(c.data(), c.data() + c.size(), e.count);
        if (res.ec != std::errc{} || res.ptr != c.data() + c.size()) {
            fail(where, "count is not a nonnegative integer");
        }
        rows.push_back(e);
    }
    return rows;
}

json envelope(const std::string& kind)
{
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

}  // namespace apncert::io
