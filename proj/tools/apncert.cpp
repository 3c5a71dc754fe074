#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "apncert/bounds.hpp"
#include "apncert/degstruct.hpp"
#include "apncert/io.hpp"
#include "apncert/lalpha.hpp"
#include "apncert/morsecert.hpp"
#include "apncert/parallel.hpp"
#include "apncert/report.hpp"
#include "apncert/rng.hpp"
#include "apncert/uniformity.hpp"
#include "apncert/verify.hpp"

using namespace apncert;
using io::json;

namespace {

enum Exit : int { ok = 0, violation = 1, invalid = 2, inconclusive = 3 };

int emit(const json& j, int code)
{
    std::cout << j.dump(2) << '\n';
    return code;
}

UPoly load_poly(const std::string& field_arg, const std::string& path)
{
    UPoly f = io::read_poly_file(path);
    if (!field_arg.empty()) {
        const FieldPtr F = io::parse_field_arg(field_arg);
        if (!F->same_as(*f.field())) {
            throw io::InputError(path + ": polynomial field GF(2^" + std::to_string(f.field()->degree()) + ", " +
                                 io::hex(f.field()->modulus()) + ") differs from --field GF(2^" +
                                 std::to_string(F->degree()) + ", " + io::hex(F->modulus()) + ")");
        }
    }
    return f;
}

struct Args {
    std::string suite = "all";
    std::string tier = "fast";
    std::optional<std::uint64_t> seed;
    std::string field;
    std::string poly;
    std::string alpha;
    std::string out;
    std::optional<int> m;
    std::optional<int> n;
    std::uint64_t budget = 1000000;
    std::optional<std::uint64_t> samples;
    bool exhaustive = false;
    bool list = false;
    std::uint64_t max = 1000;
    std::optional<std::uint64_t> bounds_m;
    int r = 0;
    int ell = 0;
    std::vector<int> grid;
};

std::uint64_t need_seed(const Args& a, const std::string& cmd)
{
    if (!a.seed) {
        throw io::InputError(cmd + ": --seed is required for randomized commands");
    }
    return *a.seed;
}

int cmd_verify(const Args& a)
{
    const auto rep = run_verify(a.suite, parse_tier(a.tier), need_seed(a, "verify"));
    return emit(io::to_json(rep), rep.passed() ? ok : violation);
}

int cmd_certify(const Args& a)
{
    const std::uint64_t seed = need_seed(a, "certify");
    const UPoly f = [&] {
        if (a.poly.empty()) {
            if (!a.m || !a.n) {
                throw io::InputError("certify: --m and --n are required without --poly");
            }
            if (*a.n < 1 || *a.n > 63) {
                throw io::InputError("certify: --n must be in 1..63");
            }
            return random_poly(Field::make(*a.n), *a.m, seed);
        }
        UPoly g = io::read_poly_file(a.poly);
        if (a.m && *a.m != g.degree()) {
            throw io::InputError(a.poly + ": degree " + std::to_string(g.degree()) + " differs from --m " + std::to_string(*a.m));
        }
        if (a.n && *a.n != g.field()->degree()) {
            throw io::InputError(a.poly + ": field degree " + std::to_string(g.field()->degree()) + " differs from --n " +
                                 std::to_string(*a.n));
        }
        return g;
    }();
    const auto r = certify_max(f, {a.budget, seed, 4096});
    json j = io::envelope("certify");
    j["seed"] = seed;
    j["budget"] = a.budget;
    j.update(io::to_json(r));
    return emit(j, r.status == CertifyResult::Status::certified ? ok : inconclusive);
}

int cmd_du(const Args& a)
{
    if (!a.exhaustive) {
        throw io::InputError("du: only --exhaustive evaluation is available");
    }
    const UPoly f = load_poly(a.field, a.poly);
    json j = io::envelope("differential_uniformity");
    j["n"] = f.field()->degree();
    j["m"] = f.degree();
    j.update(io::to_json(delta_exhaustive(f)));
    return emit(j, ok);
}

int cmd_morse_scan(const Args& a)
{
    const UPoly f = load_poly(a.field, a.poly);
    ScanOptions opt;
    if (a.samples) {
        if (a.exhaustive) {
            throw io::InputError("morse-scan: --exhaustive and --samples are exclusive");
        }
        opt.exhaustive = false;
        opt.samples = *a.samples;
        opt.seed = need_seed(a, "morse-scan");
    }
    const auto s = alpha_scan(f, opt);
    json j = io::envelope("morse_scan");
    j.update(io::to_json(s));
    return emit(j, s.bounds_ok() ? ok : violation);
}

int cmd_lalpha(const Args& a)
{
    const UPoly f = load_poly(a.field, a.poly);
    const FieldElem alpha = f.field()->elem(io::parse_elem(*f.field(), a.alpha, "--alpha"));
    json j = io::envelope("lalpha");
    j.update(io::to_json(l_alpha(f, alpha)));
    return emit(j, ok);
}

int cmd_bounds(const Args& a)
{
    if (a.list) {
        json j = io::envelope("admissible_table");
        j["max"] = a.max;
        json rows = json::array();
        for (const auto& p : admissible_degrees(a.max)) {
            rows.push_back(io::to_json(bounds_report(p.m)));
        }
        j["degrees"] = std::move(rows);
        return emit(j, ok);
    }
    if (!a.bounds_m) {
        throw io::InputError("bounds: either --m or --list is required");
    }
    const auto p = degree_profile(*a.bounds_m);
    if (!p.admissible) {
        json j = io::envelope("degree_profile");
        j.update(io::to_json(p));
        return emit(j, ok);
    }
    json j = io::envelope("bounds");
    j.update(io::to_json(bounds_report(*a.bounds_m)));
    return emit(j, ok);
}

int cmd_structure(const Args& a)
{
    if (!a.grid.empty()) {
        json j = io::envelope("structure_grid");
        json rows = json::array();
        bool all_ok = true;
        for (const auto& rep : structure_grid(a.grid[0], a.grid[1])) {
            all_ok = all_ok && rep.ok();
            rows.push_back(io::to_json(rep));
        }
        j["reports"] = std::move(rows);
        j["ok"] = all_ok;
        return emit(j, all_ok ? ok : violation);
    }
    if (a.r < 2 || a.ell < 1) {
        throw io::InputError("structure: need --r >= 2 and --ell >= 1, or --grid RMAX LMAX");
    }
    const auto rep = structure_report(a.r, a.ell);
    json j = io::envelope("structure");
    j.update(io::to_json(rep));
    return emit(j, rep.ok() ? ok : violation);
}

int cmd_ddt(const Args& a)
{
    const UPoly f = load_poly(a.field, a.poly);
    const Field& F = *f.field();
    if (F.degree() > 12) {
        throw io::InputError("ddt: full tables are limited to n <= 12");
    }
    const auto table = value_table(f);
    std::vector<io::DDTEntry> rows;
    auto add_row = [&](Bits alpha) {
        const auto row = ddt_row(table, alpha);
        for (Bits b = 0; b <= F.max_element(); ++b) {
            if (row.counts[b] != 0) {
                rows.push_back({alpha, b, row.counts[b]});
            }
        }
    };
    if (!a.alpha.empty()) {
        add_row(io::parse_elem(F, a.alpha, "--alpha"));
    } else {
        for (Bits alpha = 1; alpha <= F.max_element(); ++alpha) {
            add_row(alpha);
        }
    }
    std::ofstream out(a.out);
    if (!out) {
        throw io::InputError(a.out + ": cannot open for writing");
    }
    io::write_ddt_csv(out, rows);
    json j = io::envelope("ddt");
    j["out"] = a.out;
    j["columns"] = json::array({"alpha_hex", "beta_hex", "count"});
    j["rows"] = rows.size();
    return emit(j, ok);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"apncert: differential uniformity certificates over GF(2^n)"};
    app.require_subcommand(1);
    Args a;

    auto* verify = app.add_subcommand("verify", "re-check the structural claims at pinned parameters");
    verify->add_option("suite", a.suite, "lalpha, morse, structure, pi, bounds, uniformity or all");
    verify->add_option("--tier", a.tier, "fast, standard or slow");
    verify->add_option("--seed", a.seed, "random seed")->required();

    auto* certify = app.add_subcommand("certify", "search a witness beta with m-2 solutions");
    certify->add_option("--m", a.m, "degree of f");
    certify->add_option("--n", a.n, "field degree");
    certify->add_option("--seed", a.seed, "random seed")->required();
    certify->add_option("--poly", a.poly, "polynomial JSON file instead of a seeded random f");
    certify->add_option("--budget", a.budget, "maximum beta trials");

    auto* du = app.add_subcommand("du", "differential uniformity by exhaustive evaluation");
    du->add_option("--field", a.field, "field JSON file, inline JSON, or n");
    du->add_option("--poly", a.poly, "polynomial JSON file")->required();
    du->add_flag("--exhaustive", a.exhaustive, "evaluate every (alpha, x)");

    auto* scan = app.add_subcommand("morse-scan", "Morse conditions over alpha");
    scan->add_option("--field", a.field, "field JSON file, inline JSON, or n");
    scan->add_option("--poly", a.poly, "polynomial JSON file")->required();
    scan->add_flag("--exhaustive", a.exhaustive, "scan every nonzero alpha (default)");
    scan->add_option("--samples", a.samples, "number of sampled alphas");
    scan->add_option("--seed", a.seed, "random seed for --samples");

    auto* lal = app.add_subcommand("lalpha", "L_alpha f and its coefficients");
    lal->add_option("--field", a.field, "field JSON file, inline JSON, or n");
    lal->add_option("--alpha", a.alpha, "alpha as hex")->required();
    lal->add_option("--poly", a.poly, "polynomial JSON file")->required();

    auto* bnd = app.add_subcommand("bounds", "thresholds N1 and N2 for a degree");
    bnd->add_option("--m", a.bounds_m, "degree");
    bnd->add_flag("--list", a.list, "table of admissible degrees");
    bnd->add_option("--max", a.max, "largest degree for --list");

    auto* st = app.add_subcommand("structure", "structure of L_1(x^(m-1)) for m = 2^r(2^l+1)");
    st->add_option("--r", a.r, "r >= 2");
    st->add_option("--ell", a.ell, "l >= 1");
    st->add_option("--grid", a.grid, "RMAX LMAX")->expected(2);

    auto* ddt = app.add_subcommand("ddt", "export the difference distribution table as CSV");
    ddt->add_option("--field", a.field, "field JSON file, inline JSON, or n");
    ddt->add_option("--poly", a.poly, "polynomial JSON file")->required();
    ddt->add_option("--alpha", a.alpha, "single row (hex)");
    ddt->add_option("--out", a.out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return invalid;
    }

    try {
        if (verify->parsed()) return cmd_verify(a);
        if (certify->parsed()) return cmd_certify(a);
        if (du->parsed()) return cmd_du(a);
        if (scan->parsed()) return cmd_morse_scan(a);
        if (lal->parsed()) return cmd_lalpha(a);
        if (bnd->parsed()) return cmd_bounds(a);
        if (st->parsed()) return cmd_structure(a);
        if (ddt->parsed()) return cmd_ddt(a);
    } catch (const InvariantViolation& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return violation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return invalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return invalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return violation;
    }
    return invalid;
}
