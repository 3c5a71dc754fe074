#include "apncert/morsecert.hpp"

#include <algorithm>
#include <exception>
#include <limits>

#include "apncert/bounds.hpp"
#include "apncert/parallel.hpp"
#include "apncert/rng.hpp"

namespace apncert {

namespace {

void require_b0(const DerivativeBundle& bundle, const char* who)
{
    if (bundle.b.empty() || bundle.b[0].is_zero()) {
        throw AlgebraError(std::string(who) + ": b0 = a1 alpha is zero (degenerate bundle)");
    }
}

// Res(c, c') for the monic critical-value polynomial; no nondegeneracy check.
FieldElem pi_unchecked(const UPoly& g)
{
    const UPoly c = critical_value_poly(g, false);
    const Field& F = *g.field();
    if (c.degree() <= 1) {
        return F.one();  // at most one critical value: empty product
    }
    const UPoly dc = formal_derivative(c);
    if (dc.is_zero()) {
        return F.zero();
    }
    return resultant(c, dc);
}

}  // namespace

std::uint64_t e_of_d(int d)
{
    if (d < 1 || d % 2 == 0) {
        return 0;
    }
    const std::uint64_t k = static_cast<std::uint64_t>(d - 1) / 2;
    return k == 0 ? 0 : k * (k - 1) / 2;
}

std::pair<bool, FieldElem> check_Ia(const DerivativeBundle& bundle)
{
    require_b0(bundle, "check_Ia");
    const UPoly& D = bundle.d_alpha_f;
    const int formal = bundle.m - 4;
    const FieldElem r = resultant_formal(formal_derivative(D), hasse2(D), formal, formal);
    return {!r.is_zero(), r};
}

bool nondegenerate_critical_points(const UPoly& g)
{
    const UPoly g1 = formal_derivative(g);
    const UPoly g2 = hasse2(g);
    if (g1.is_zero() && g2.is_zero()) {
        return g.degree() <= 0;
    }
    return gcd(g1, g2).degree() == 0;
}

bool check_Ia_via_gcd(const DerivativeBundle& bundle)
{
    require_b0(bundle, "check_Ia_via_gcd");
    return nondegenerate_critical_points(bundle.l_alpha_f);
}

UPoly critical_value_poly(const UPoly& g, bool require_simple)
{
    const int d = g.degree();
    if (d < 1 || d % 2 == 0) {
        throw AlgebraError("critical_value_poly: degree must be odd");
    }
    const FieldPtr& field = g.field();
    const Field& F = *field;
    const UPoly s = sqrt_even(formal_derivative(g));
    const int k = s.degree();
    if (k == 0) {
        return UPoly::constant(field, 1);
    }
    if (require_simple && !is_squarefree(s)) {
        throw AlgebraError("critical_value_poly: critical points are not simple");
    }
    if (static_cast<std::uint64_t>(k) > F.max_element()) {
        throw AlgebraError("critical_value_poly: field too small for interpolation");
    }
    const UPoly r = g % s;
    const Bits lc_inv = F.inv(s.lead());
    std::vector<Bits> xs, ys;
    for (int y = 0; y <= k; ++y) {
        const UPoly h = add_constant(r, static_cast<Bits>(y));
        Bits v = 0;
        if (!h.is_zero()) {
            v = F.mul(resultant(s, h).bits(), F.pow(lc_inv, static_cast<std::uint64_t>(h.degree())));
        }
        xs.push_back(static_cast<Bits>(y));
        ys.push_back(v);
    }
    UPoly c = interpolate(field, xs, ys);
    if (c.degree() != k || !c.is_monic()) {
        throw InvariantViolation("critical_value_poly: interpolant is not monic of degree (d-1)/2");
    }
    return c;
}

FieldElem pi_d(const UPoly& g)
{
    if (!nondegenerate_critical_points(g)) {
        throw AlgebraError("pi_d: critical points are degenerate");
    }
    return pi_unchecked(g);
}

std::optional<FieldElem> pi_value(const DerivativeBundle& bundle)
{
    if (!check_Ia(bundle).first) {
        return std::nullopt;
    }
    const auto de = static_cast<std::uint64_t>(bundle.d) * e_of_d(bundle.d);
    return bundle.b[0].pow(de) * pi_unchecked(bundle.l_alpha_f);
}

std::pair<bool, std::optional<FieldElem>> check_II(const DerivativeBundle& bundle)
{
    require_b0(bundle, "check_II");
    const FieldElem u = bundle.b[1] / bundle.b[0];
    auto x = solve_artin_schreier(bundle.alpha, u);
    if (x && !(x->square() + bundle.alpha * *x == u)) {
        throw InvariantViolation("check_II: Artin-Schreier witness does not solve x^2 + alpha x = b1/b0");
    }
    return {x.has_value(), x};
}

MorseReport morse_report(const DerivativeBundle& bundle)
{
    const auto [ia, res] = check_Ia(bundle);
    MorseReport rep{.alpha = bundle.alpha, .resultant_value = res, .pi_value = std::nullopt, .witness_x = std::nullopt};
    rep.cond_Ia = ia;
    rep.cond_Ic = bundle.l_alpha_f.degree() == bundle.d && bundle.d % 2 == 1;
    if (ia) {
        const auto de = static_cast<std::uint64_t>(bundle.d) * e_of_d(bundle.d);
        rep.pi_value = bundle.b[0].pow(de) * pi_unchecked(bundle.l_alpha_f);
        rep.cond_Ib = !rep.pi_value->is_zero();
    }
    auto [ii, x] = check_II(bundle);
    rep.cond_II = ii;
    rep.witness_x = x;
    rep.morse = rep.cond_Ia && rep.cond_Ib && rep.cond_Ic;
    return rep;
}

MorseReport morse_report(const UPoly& f, const FieldElem& alpha)
{
    return morse_report(l_alpha(f, alpha));
}

// ---------------------------------------------------------------- scans

namespace {

struct ScanPlan {
    std::uint64_t count = 0;
    bool exhaustive = true;
    std::uint64_t seed = 0;
};

ScanPlan make_plan(const UPoly& f, const ScanOptions& opt)
{
    const int m = f.degree();
    if (m < 4 || m % 4 != 0) {
        throw AlgebraError("alpha_scan: degree must be a positive multiple of 4");
    }
    if (top_coeff(f, 1).is_zero()) {
        throw AlgebraError("alpha_scan: a1 must be nonzero");
    }
    const Field& F = *f.field();
    if (opt.exhaustive) {
        if (F.degree() > 20) {
            throw AlgebraError("alpha_scan: exhaustive mode needs n <= 20; use sampling");
        }
        return {F.max_element(), true, 0};
    }
    if (opt.samples == 0) {
        throw AlgebraError("alpha_scan: sampling mode needs a positive sample count");
    }
    return {opt.samples, false, opt.seed};
}

Bits alpha_at(const Field& F, const ScanPlan& plan, const CounterStream& rng, std::uint64_t i)
{
    return plan.exhaustive ? static_cast<Bits>(i + 1) : rng.nonzero_element(F, i);
}

struct Tally {
    std::uint64_t scanned = 0, fail_Ia = 0, fail_Ib = 0, satisfy_II = 0, certified = 0;
    std::uint64_t first_certified = std::numeric_limits<std::uint64_t>::max();

    void add(const MorseReport& r, std::uint64_t index)
    {
        ++scanned;
        fail_Ia += r.cond_Ia ? 0 : 1;
        fail_Ib += (r.cond_Ia && !r.cond_Ib) ? 1 : 0;
        satisfy_II += r.cond_II ? 1 : 0;
        if (r.certified()) {
            ++certified;
            first_certified = std::min(first_certified, index);
        }
    }
    void merge(const Tally& o)
    {
        scanned += o.scanned;
        fail_Ia += o.fail_Ia;
        fail_Ib += o.fail_Ib;
        satisfy_II += o.satisfy_II;
        certified += o.certified;
        first_certified = std::min(first_certified, o.first_certified);
    }
};

bool half_power_bound_holds(std::uint64_t count, int n)
{
    // 2 count >= 2^n - 2^{n/2+1} - 1  <=>  a := 2^n - 1 - 2 count <= 2 * 2^{n/2}
    const BigInt a = (BigInt(1) << n) - 1 - 2 * BigInt(count);
    if (a <= 0) {
        return true;
    }
    return a * a <= 4 * (BigInt(1) << n);
}

ScanSummary finish(const UPoly& f, const ScanPlan& plan, const Tally& t)
{
    const Field& F = *f.field();
    const int m = f.degree();
    const int n = F.degree();
    ScanSummary s;
    s.n = n;
    s.m = m;
    s.exhaustive = plan.exhaustive;
    s.scanned = t.scanned;
    s.fail_Ia = t.fail_Ia;
    s.fail_Ib = t.fail_Ib;
    s.satisfy_II = t.satisfy_II;
    s.certified = t.certified;
    if (t.certified > 0) {
        const CounterStream rng(plan.seed, streams::alpha);
        s.first_certified_alpha = alpha_at(F, plan, rng, t.first_certified);
    }
    s.bound_Ia = static_cast<std::uint64_t>(m - 1) * static_cast<std::uint64_t>(m - 4);
    const DegreeProfile prof = degree_profile(static_cast<std::uint64_t>(m));
    if (prof.admissible) {
        s.bound_Ib = (5 * prof.d + 4) * prof.e;
    }

    const FieldElem a1 = top_coeff(f, 1);
    const FieldElem a2 = top_coeff(f, 2);
    const FieldElem a3 = top_coeff(f, 3);
    s.trace_invariant_zero = (a2.square() + a1 * a3).is_zero();
    s.trace_branch = m % 8 == 0 ? "m=0 mod 8" : "m=4 mod 8";
    const std::uint64_t q = std::uint64_t{1} << n;

    if (!plan.exhaustive) {
        return s;
    }
    if (s.fail_Ia > s.bound_Ia) {
        s.violations.push_back("fail_Ia " + std::to_string(s.fail_Ia) + " exceeds (m-1)(m-4) = " + std::to_string(s.bound_Ia));
    }
    if (s.bound_Ib && s.fail_Ib > *s.bound_Ib) {
        s.violations.push_back("fail_Ib " + std::to_string(s.fail_Ib) + " exceeds (5d+4)e = " + std::to_string(*s.bound_Ib));
    }
    if (m % 8 == 0) {
        s.trace_predicted = s.trace_invariant_zero ? q - 1 : q / 2 - 1;
        s.trace_matches = s.satisfy_II == *s.trace_predicted;
        if (!*s.trace_matches) {
            s.violations.push_back("trace count " + std::to_string(s.satisfy_II) + " differs from predicted " +
                                   std::to_string(*s.trace_predicted));
        }
    } else if (s.trace_invariant_zero) {
        // Tr(b1/(b0 alpha^2)) = Tr(a0 alpha / a1) + n mod 2 here.
        s.trace_predicted = n % 2 == 0 ? q / 2 - 1 : q / 2;
        s.trace_matches = s.satisfy_II == *s.trace_predicted;
        if (s.satisfy_II == q - 1) {
            s.trace_reading = "2^n-1";
        } else if (s.satisfy_II == q / 2 - 1) {
            s.trace_reading = "2^(n-1)-1";
        } else {
            s.trace_reading = "neither";
        }
    } else if (!half_power_bound_holds(s.satisfy_II, n)) {
        s.violations.push_back("trace count " + std::to_string(s.satisfy_II) + " below (2^n - 2^(n/2+1) - 1)/2");
    }
    return s;
}

}  // namespace

ScanSummary alpha_scan_serial(const UPoly& f, const ScanOptions& opt)
{
    const ScanPlan plan = make_plan(f, opt);
    const Field& F = *f.field();
    const CounterStream rng(plan.seed, streams::alpha);
    Tally t;
    for (std::uint64_t i = 0; i < plan.count; ++i) {
        t.add(morse_report(f, F.elem(alpha_at(F, plan, rng, i))), i);
    }
    return finish(f, plan, t);
}

ScanSummary alpha_scan(const UPoly& f, const ScanOptions& opt)
{
    const ScanPlan plan = make_plan(f, opt);
    const Field& F = *f.field();
    const CounterStream rng(plan.seed, streams::alpha);
    Tally total;
    std::exception_ptr error;
    const auto count = static_cast<std::int64_t>(plan.count);
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp parallel num_threads(worker_count())
#endif
    {
        Tally local;
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp for schedule(dynamic, 64) nowait
#endif
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                const auto idx = static_cast<std::uint64_t>(i);
                local.add(morse_report(f, F.elem(alpha_at(F, plan, rng, idx))), idx);
            } catch (...) {
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp critical(apncert_scan_error)
#endif
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp critical(apncert_scan_merge)
#endif
        total.merge(local);
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return finish(f, plan, total);
}

std::uint64_t trace_condition_count(const UPoly& f)
{
    const Field& F = *f.field();
    if (F.degree() > 24) {
        throw AlgebraError("trace_condition_count: exhaustive scan needs n <= 24");
    }
    std::uint64_t count = 0;
    for (Bits a = 1; a <= F.max_element(); ++a) {
        count += check_II(l_alpha(f, F.elem(a))).first ? 1 : 0;
    }
    return count;
}

// ------------------------------------------------------- interpolation

namespace {

UPoly draw_poly(int m, const FieldPtr& field, std::uint64_t seed)
{
    if (m < 4 || m % 4 != 0) {
        throw AlgebraError("degree must be a positive multiple of 4");
    }
    return random_poly(field, m, seed, true);
}

InterpDegree finish_interp(const UPoly& f, const std::vector<Bits>& xs, const std::vector<Bits>& ys,
                           std::uint64_t bound)
{
    const UPoly p = interpolate(f.field(), xs, ys);
    return InterpDegree{.degree = p.degree(),
                        .leading = f.field()->elem(p.lead()),
                        .predicted_leading = std::nullopt,
                        .bound = bound,
                        .samples = xs.size(),
                        .f = f};
}

}  // namespace

InterpDegree interp_resultant_degree(const UPoly& f)
{
    const int m = f.degree();
    if (m < 4 || m % 4 != 0 || top_coeff(f, 1).is_zero()) {
        throw AlgebraError("interp_resultant_degree: need deg f = 0 mod 4 and a1 != 0");
    }
    const Field& F = *f.field();
    const std::uint64_t bound = static_cast<std::uint64_t>(m - 1) * static_cast<std::uint64_t>(m - 4);
    // One sample beyond what the bound needs, so an excess degree is visible.
    const std::uint64_t samples = bound + 2;
    if (F.max_element() < samples) {
        throw AlgebraError("interp_resultant_degree: field too small");
    }
    std::vector<Bits> xs, ys;
    for (Bits a = 1; a <= samples; ++a) {
        xs.push_back(a);
        ys.push_back(check_Ia(l_alpha(f, F.elem(a))).second.bits());
    }
    return finish_interp(f, xs, ys, bound);
}

InterpDegree interp_resultant_degree(int m, const FieldPtr& field, std::uint64_t seed)
{
    return interp_resultant_degree(draw_poly(m, field, seed));
}

InterpDegree interp_pi_degree(const UPoly& f)
{
    const int m = f.degree();
    if (m < 4 || m % 4 != 0 || top_coeff(f, 1).is_zero()) {
        throw AlgebraError("interp_pi_degree: need deg f = 0 mod 4 and a1 != 0");
    }
    const Field& F = *f.field();
    const int d = (m - 2) / 2;
    const std::uint64_t e = e_of_d(d);
    const std::uint64_t bound = (5 * static_cast<std::uint64_t>(d) + 4) * e;
    const std::uint64_t samples = bound + 2;
    std::vector<Bits> xs, ys;
    for (Bits a = 1; xs.size() < samples; ++a) {
        if (a > F.max_element()) {
            throw AlgebraError("interp_pi_degree: field too small");
        }
        const auto v = pi_value(l_alpha(f, F.elem(a)));
        if (v) {
            xs.push_back(a);
            ys.push_back(v->bits());
        }
    }
    InterpDegree out = finish_interp(f, xs, ys, bound);
    out.predicted_leading = top_coeff(f, 0).pow(2 * e) * top_coeff(f, 1).pow(static_cast<std::uint64_t>(d) * e);
    return out;
}

InterpDegree interp_pi_degree(int m, const FieldPtr& field, std::uint64_t seed)
{
    return interp_pi_degree(draw_poly(m, field, seed));
}

}  // namespace apncert
