#include "apncert/report.hpp"

namespace apncert::io {

namespace {

json elem(const FieldElem& e)
{
    return hex(e.bits());
}

template <class T>
json opt(const std::optional<T>& v)
{
    return v ? json(*v) : json(nullptr);
}

json opt_elem(const std::optional<FieldElem>& v)
{
    return v ? elem(*v) : json(nullptr);
}

}  // namespace

json to_json(const DerivativeBundle& b)
{
    json j;
    j["m"] = b.m;
    j["d"] = b.d;
    j["alpha"] = elem(b.alpha);
    j["f"] = poly_to_json(b.f);
    j["d_alpha_f"] = poly_to_json(b.d_alpha_f)["coeffs"];
    j["l_alpha_f"] = poly_to_json(b.l_alpha_f)["coeffs"];
    json bs = json::array();
    for (const auto& x : b.b) {
        bs.push_back(elem(x));
    }
    j["b"] = std::move(bs);
    return j;
}

json to_json(const MorseReport& r)
{
    json j;
    j["alpha"] = elem(r.alpha);
    j["cond_Ia"] = r.cond_Ia;
    j["cond_Ib"] = r.cond_Ib;
    j["cond_Ic"] = r.cond_Ic;
    j["cond_II"] = r.cond_II;
    j["morse"] = r.morse;
    j["resultant_value"] = elem(r.resultant_value);
    j["pi_value"] = opt_elem(r.pi_value);
    j["witness_x"] = opt_elem(r.witness_x);
    return j;
}

json to_json(const ScanSummary& s)
{
    json j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["mode"] = s.exhaustive ? "exhaustive" : "sampled";
    j["scanned"] = s.scanned;
    j["fail_Ia"] = s.fail_Ia;
    j["fail_Ib"] = s.fail_Ib;
    j["satisfy_II"] = s.satisfy_II;
    j["certified"] = s.certified;
    j["first_certified_alpha"] = s.first_certified_alpha ? json(hex(*s.first_certified_alpha)) : json(nullptr);
    json b;
    b["fail_Ia_max"] = s.bound_Ia;
    b["fail_Ib_max"] = opt(s.bound_Ib);
    b["holds"] = s.bounds_ok();
    b["violations"] = s.violations;
    j["bounds"] = std::move(b);
    json t;
    t["branch"] = s.trace_branch;
    t["a2_sq_plus_a1_a3_zero"] = s.trace_invariant_zero;
    t["predicted"] = opt(s.trace_predicted);
    t["matches"] = opt(s.trace_matches);
    if (!s.trace_reading.empty()) {
        t["reading"] = s.trace_reading;
    }
    j["trace"] = std::move(t);
    return j;
}

json to_json(const DegreeProfile& p)
{
    json j;
    j["m"] = p.m;
    j["r"] = p.r;
    j["ell"] = p.shape_ok ? json(p.ell) : json(nullptr);
    j["d"] = p.d;
    j["e"] = p.e;
    j["shape_ok"] = p.shape_ok;
    j["gcd_r_ell"] = p.shape_ok ? json(p.gcd_r_ell) : json(nullptr);
    j["admissible"] = p.admissible;
    return j;
}

json to_json(const BoundsReport& r)
{
    json j;
    j["profile"] = to_json(r.profile);
    j["n1"] = r.n1;
    j["n2"] = r.n2;
    j["n_threshold"] = r.n_threshold;
    j["n_threshold_meaning"] = "sufficient for maximal uniformity; not claimed minimal";
    j["d_omega"] = r.d_omega.str();
    j["g_omega_bound"] = r.g_omega_bound.str();
    j["degenerate_alpha_bound"] = r.degenerate_alpha_bound.str();
    j["repeated_value_alpha_bound"] = r.repeated_value_alpha_bound.str();
    return j;
}

json to_json(const StructureReport& r)
{
    json j;
    j["r"] = r.r;
    j["ell"] = r.ell;
    j["m"] = r.m;
    j["d"] = r.d;
    j["N"] = r.N;
    j["feasible"] = r.feasible;
    json g;
    g["gcd_r_ell"] = r.gcd_lemma.gcd_r_ell;
    g["gcd_d_4l_minus_1"] = r.gcd_lemma.gcd_value;
    g["expected"] = opt(r.gcd_lemma.expected);
    g["holds"] = r.gcd_lemma.holds();
    j["gcd_lemma"] = std::move(g);
    j["closed_form_identity"] = r.closed_form_identity;
    j["closed_form_degree"] = r.closed_form_degree;
    j["derivative_identity"] = r.derivative_identity;
    if (r.feasible) {
        j["tau_count"] = r.tau_count;
        j["taus_are_roots"] = r.taus_are_roots;
        j["p_r_minus_1_nonzero"] = r.p_r_minus_1_nonzero;
        json pairs = json::array();
        for (const auto& [a, b] : r.vanishing->vanishing_pairs) {
            pairs.push_back(json::array({a, b}));
        }
        j["vanishing_pairs"] = std::move(pairs);
        j["no_vanishing_pair"] = r.vanishing->verdict;
        j["gcd_at_most_2"] = r.vanishing->expected;
        j["equivalence_holds"] = r.vanishing->agrees();
        j["ratio_chain_pairs"] = r.ratio_chain->pairs_checked;
        j["ratio_chain_holds"] = r.ratio_chain->holds;
    } else {
        j["infeasible_reason"] = "ord_d(2) = " + std::to_string(r.N) + " exceeds 64";
    }
    j["ok"] = r.ok();
    return j;
}

json to_json(const DeltaResult& r)
{
    json j;
    j["delta"] = r.delta;
    j["witness_total"] = r.witness_total;
    json w = json::array();
    for (const auto& [a, b] : r.witnesses) {
        w.push_back(json{{"alpha", hex(a)}, {"beta", hex(b)}});
    }
    j["witnesses"] = std::move(w);
    j["witnesses_truncated"] = r.witness_total > r.witnesses.size();
    return j;
}

json to_json(const CertifyResult& r)
{
    json j;
    j["status"] = r.status == CertifyResult::Status::certified ? "certified" : "inconclusive";
    j["alpha_trials"] = r.alpha_trials;
    j["beta_trials"] = r.beta_trials;
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    if (r.witness) {
        const auto& w = *r.witness;
        json x;
        x["n"] = w.n;
        x["f"] = poly_to_json(w.f);
        x["alpha"] = elem(w.alpha);
        x["beta"] = elem(w.beta);
        x["x0"] = elem(w.x0);
        x["root_count"] = w.root_count;
        x["morse_report"] = to_json(w.morse_report);
        j["witness"] = std::move(x);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json to_json(const InterpDegree& r)
{
    json j;
    j["degree"] = r.degree;
    j["bound"] = r.bound;
    j["samples"] = r.samples;
    j["leading"] = elem(r.leading);
    j["predicted_leading"] = opt_elem(r.predicted_leading);
    return j;
}

}  // namespace apncert::io
