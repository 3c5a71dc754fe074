// One line per acceptance criterion: "criterion N: PASS|FAIL <summary> [t s / limit s]".
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "apncert/bounds.hpp"
#include "apncert/degstruct.hpp"
#include "apncert/morsecert.hpp"
#include "apncert/rng.hpp"
#include "apncert/uniformity.hpp"
#include "oracles.hpp"

using namespace apncert;

namespace {

struct Outcome {
    bool ok = false;
    std::string summary;
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = out.ok && t < limit_s;
    failures += ok ? 0 : 1;
    std::printf("criterion %d: %s %s [%.2f s / %.0f s]\n", id, ok ? "PASS" : "FAIL", out.summary.c_str(), t, limit_s);
    std::fflush(stdout);
}

UPoly with_invariant(const FieldPtr& F, int m, std::uint64_t seed, bool zero)
{
    for (std::uint64_t k = 0;; ++k) {
        const UPoly base = random_poly(F, m, splitmix64(seed * 1000 + k));
        std::vector<Bits> c(base.coeffs().begin(), base.coeffs().end());
        const auto M = static_cast<std::size_t>(m);
        if (zero) {
            c[M - 3] = c[M - 3] == 0 ? 1 : c[M - 3];
            c[M - 2] = F->sqrt(F->mul(c[M - 1], c[M - 3]));
            return UPoly(F, c);
        }
        if ((F->sqr(c[M - 2]) ^ F->mul(c[M - 1], c[M - 3])) != 0) {
            return base;
        }
    }
}

}  // namespace

int main()
{
    criterion(1, 1, [] {
        const auto a = n1(12);
        const auto b = n2(12);
        std::ostringstream s;
        s << "n1(12)=" << a << " n2(12)=" << b;
        return Outcome{a == 9 && b == 28, s.str()};
    });

    criterion(2, 120, [] {
        const auto F = Field::make(28);
        std::uint64_t ok = 0, trials = 0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const UPoly f = random_poly(F, 12, seed);
            const auto r = certify_max(f, {1000000, seed, 4096});
            if (r.status == CertifyResult::Status::certified && r.witness->root_count == 10 &&
                solutions_count(f, r.witness->alpha, r.witness->beta) == 10) {
                ++ok;
            }
            trials += r.beta_trials;
        }
        std::ostringstream s;
        s << ok << "/5 random f over GF(2^28) certified with root_count 10; " << trials << " beta trials total";
        return Outcome{ok == 5, s.str()};
    });

    criterion(3, 10, [] {
        const auto F = Field::make(10);
        std::uint64_t generic = 0, special = 0;
        for (std::uint64_t k = 0; k < 20; ++k) {
            generic += trace_condition_count(with_invariant(F, 24, 100 + k, false)) == 511 ? 1 : 0;
            special += trace_condition_count(with_invariant(F, 24, 200 + k, true)) == 1023 ? 1 : 0;
        }
        std::ostringstream s;
        s << "m=24 n=10: " << generic << "/20 give 511, " << special << "/20 degenerate give 1023";
        return Outcome{generic == 20 && special == 20, s.str()};
    });

    criterion(4, 30, [] {
        const auto F = Field::make(7);
        int max_deg = -1;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            max_deg = std::max(max_deg, interp_resultant_degree(12, F, seed).degree);
        }
        std::ostringstream s;
        s << "max alpha-degree over 20 seeds = " << max_deg << " (expected 88)";
        return Outcome{max_deg == 88, s.str()};
    });

    criterion(5, 60, [] {
        const auto F7 = Field::make(7);
        std::uint64_t deg_ok = 0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto r = interp_pi_degree(12, F7, seed);
            deg_ok += r.degree == 29 && r.leading == *r.predicted_leading ? 1 : 0;
        }
        const auto F = Field::make(16);
        std::uint64_t lam = 0, mu = 0, defined = 0;
        for (std::uint64_t t = 0; defined < 100; ++t) {
            const CounterStream rng(t, streams::scaling);
            const UPoly f = random_poly(F, 12, 900 + t);
            const FieldElem a = F->elem(rng.nonzero_element(*F, 0));
            const FieldElem l = F->elem(rng.nonzero_element(*F, 1));
            const FieldElem u = F->elem(rng.nonzero_element(*F, 2));
            const auto v = pi_value(l_alpha(f, a));
            const auto vl = pi_value(l_alpha(weighted_scale(f, l.bits()), l * a));
            const auto vu = pi_value(l_alpha(scale(f, u.bits()), a));
            if (!v || !vl || !vu) {
                continue;
            }
            ++defined;
            lam += *vl == l.pow(34) * *v ? 1 : 0;
            mu += *vu == u.pow(7) * *v ? 1 : 0;
        }
        std::ostringstream s;
        s << deg_ok << "/20 seeds degree 29 with leading a0^2 a1^5; lambda^34 " << lam << "/100, mu^7 " << mu << "/100";
        return Outcome{deg_ok == 20 && lam == 100 && mu == 100, s.str()};
    });

    criterion(6, 120, [] {
        std::uint64_t feasible = 0, ok = 0;
        for (const auto& rep : structure_grid(6, 6)) {
            if (!rep.feasible) {
                continue;
            }
            ++feasible;
            ok += rep.closed_form_identity && rep.derivative_identity && rep.p_r_minus_1_nonzero &&
                          rep.vanishing->agrees()
                      ? 1
                      : 0;
        }
        const bool named = vanishing_pairs_check(2, 1).vanishing_pairs.empty() &&
                           vanishing_pairs_check(2, 2).vanishing_pairs.empty() &&
                           vanishing_pairs_check(3, 1).vanishing_pairs.empty() &&
                           !vanishing_pairs_check(3, 3).vanishing_pairs.empty() &&
                           !vanishing_pairs_check(4, 4).vanishing_pairs.empty();
        std::ostringstream s;
        s << ok << "/" << feasible << " feasible grid points consistent; named points "
          << (named ? "as expected" : "MISMATCH");
        return Outcome{ok == feasible && feasible > 0 && named, s.str()};
    });

    criterion(7, 1, [] {
        std::uint64_t checked = 0, ok = 0;
        for (int r = 2; r <= 12; ++r) {
            for (int l = 1; l <= 12; ++l) {
                const auto g = gcd_lemma_check(r, l);
                if (g.expected) {
                    ++checked;
                    ok += g.holds() ? 1 : 0;
                }
            }
        }
        std::ostringstream s;
        s << ok << "/" << checked << " pairs with gcd(r,l) <= 2";
        return Outcome{ok == checked && checked > 0, s.str()};
    });

    criterion(8, 300, [] {
        std::uint64_t pairs = 0, a_ok = 0;
        for (int m : {12, 20}) {
            for (int n : {8, 10}) {
                const auto F = Field::make(n);
                const UPoly f = random_poly(F, m, static_cast<std::uint64_t>(m * 100 + n));
                const auto table = value_table(f);
                for (Bits a = 1; a <= F->max_element(); ++a) {
                    const auto row = ddt_row(table, a);
                    for (Bits b = 0; b <= F->max_element(); ++b) {
                        ++pairs;
                        a_ok += solutions_count(f, F->elem(a), F->elem(b)) == row.counts[b] ? 1 : 0;
                    }
                }
            }
        }
        const auto F8 = Field::make(8);
        std::uint64_t b_ok = 0, used = 0;
        for (std::uint64_t t = 0; used < 100; ++t) {
            const UPoly g = random_poly(F8, 5, 7000 + t);
            const UPoly s = sqrt_even(formal_derivative(g));
            if (!is_squarefree(s) || !nondegenerate_critical_points(g)) {
                continue;
            }
            ++used;
            const auto E = Field::make(8 * static_cast<int>(splitting_degree(s)));
            const Embedding emb(F8, E);
            const UPoly ge = embed_poly(emb, g);
            const auto taus = roots_in_field(embed_poly(emb, s));
            Bits prod = 1;
            for (std::size_t i = 0; i < taus.size(); ++i) {
                for (std::size_t j = 0; j < taus.size(); ++j) {
                    if (i != j) {
                        prod = E->mul(prod, oracle::eval(ge, taus[i]) ^ oracle::eval(ge, taus[j]));
                    }
                }
            }
            b_ok += emb.embed_bits(pi_d(g).bits()) == prod ? 1 : 0;
        }
        const auto F16 = Field::make(16);
        std::uint64_t c_ok = 0, c_total = 0;
        for (const auto& p : admissible_degrees(100)) {
            const CounterStream rng(p.m, streams::alpha);
            for (std::uint64_t t = 0; t < 100; ++t) {
                const FieldElem a = F16->elem(rng.nonzero_element(*F16, t));
                ++c_total;
                c_ok += l_alpha_monomial(static_cast<int>(p.m), a) ==
                                l_alpha(UPoly::monomial(F16, 1, p.m), a).l_alpha_f
                            ? 1
                            : 0;
            }
        }
        std::ostringstream s;
        s << "(a) " << a_ok << "/" << pairs << " (b) " << b_ok << "/100 (c) " << c_ok << "/" << c_total;
        return Outcome{a_ok == pairs && b_ok == 100 && c_ok == c_total, s.str()};
    });

    criterion(9, 60, [] {
        const auto F = Field::make(16);
        std::uint64_t total = 0, ok = 0;
        for (int m : {12, 20, 24}) {
            const CounterStream rng(static_cast<std::uint64_t>(m), streams::sample);
            for (std::uint64_t t = 0; t < 1000; ++t) {
                const UPoly f = random_poly(F, m, t * 64 + static_cast<std::uint64_t>(m));
                const UPoly g = random_poly(F, m, t * 64 + 7 + static_cast<std::uint64_t>(m), false);
                const FieldElem a = F->elem(rng.nonzero_element(*F, 2 * t));
                const FieldElem l = F->elem(rng.nonzero_element(*F, 2 * t + 1));
                const auto B = l_alpha(f, a);
                bool good = compose(B.l_alpha_f, t_alpha(F, a.bits())) == d_alpha(f, a);
                good = good && l_alpha_poly(f + g, a) == B.l_alpha_f + l_alpha_poly(g, a);
                good = good && B.b[0] == top_coeff(f, 1) * a && B.b[1] == b1_closed_form(f, a);
                const auto Bs = l_alpha(weighted_scale(f, l.bits()), l * a);
                for (std::size_t i = 0; i < B.b.size(); ++i) {
                    good = good && Bs.b[i] == l.pow(2 * i + 2) * B.b[i];
                }
                ++total;
                ok += good ? 1 : 0;
            }
        }
        std::uint64_t ex_total = 0, ex_ok = 0;
        for (int n = 1; n <= 6; ++n) {
            const auto Fn = Field::make(n);
            for (int m : {12, 20, 24}) {
                const UPoly f = random_poly(Fn, m, static_cast<std::uint64_t>(n * 100 + m));
                for (Bits a = 1; a <= Fn->max_element(); ++a) {
                    const FieldElem al = Fn->elem(a);
                    const auto B = l_alpha(f, al);
                    ++ex_total;
                    ex_ok += compose(B.l_alpha_f, t_alpha(Fn, a)) == d_alpha(f, al) && B.b[0] == top_coeff(f, 1) * al &&
                                     B.b[1] == b1_closed_form(f, al)
                                 ? 1
                                 : 0;
                }
            }
        }
        std::ostringstream s;
        s << ok << "/" << total << " randomized trials, " << ex_ok << "/" << ex_total << " exhaustive (n <= 6)";
        return Outcome{ok == total && ex_ok == ex_total, s.str()};
    });

    std::printf("acceptance: %s\n", failures == 0 ? "all criteria pass" : "FAILURES");
    return failures == 0 ? 0 : 1;
}
