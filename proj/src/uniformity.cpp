#include "apncert/uniformity.hpp"

#include <algorithm>
#include <exception>

#include "apncert/bounds.hpp"
#include "apncert/parallel.hpp"
#include "apncert/rng.hpp"

namespace apncert {

namespace {

void require_table_size(const Field& F, int max_n, const char* who)
{
    if (F.degree() > max_n) {
        throw AlgebraError(std::string(who) + ": needs n <= " + std::to_string(max_n) + ", got n = " +
                           std::to_string(F.degree()));
    }
}

struct AlphaRow {
    std::uint32_t max = 0;
    std::uint64_t ties = 0;
    std::vector<Bits> betas;  // first kWitnessCap betas attaining max
};

void tally_row(const std::vector<Bits>& t, Bits alpha, std::vector<std::uint32_t>& hist, AlphaRow& row)
{
    std::fill(hist.begin(), hist.end(), 0);
    for (Bits x = 0; x < t.size(); ++x) {
        ++hist[t[x] ^ t[x ^ alpha]];
    }
    row.max = *std::max_element(hist.begin(), hist.end());
    for (Bits b = 0; b < hist.size(); ++b) {
        if (hist[b] == row.max) {
            ++row.ties;
            if (row.betas.size() < DeltaResult::kWitnessCap) {
                row.betas.push_back(b);
            }
        }
    }
}

DeltaResult merge_rows(const std::vector<AlphaRow>& rows)
{
    DeltaResult out;
    for (const auto& r : rows) {
        out.delta = std::max<std::uint64_t>(out.delta, r.max);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].max != out.delta) {
            continue;
        }
        out.witness_total += rows[i].ties;
        for (Bits b : rows[i].betas) {
            if (out.witnesses.size() < DeltaResult::kWitnessCap) {
                out.witnesses.emplace_back(static_cast<Bits>(i + 1), b);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Bits> value_table(const UPoly& f)
{
    const Field& F = *f.field();
    require_table_size(F, 24, "value_table");
    std::vector<Bits> t(std::size_t{1} << F.degree());
    const auto size = static_cast<std::int64_t>(t.size());
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp parallel for schedule(static) num_threads(worker_count())
#endif
    for (std::int64_t x = 0; x < size; ++x) {
        t[static_cast<std::size_t>(x)] = f.eval(static_cast<Bits>(x));
    }
    return t;
}

DDTRow ddt_row(const std::vector<Bits>& table, Bits alpha)
{
    if (alpha == 0 || alpha >= table.size()) {
        throw AlgebraError("ddt_row: alpha must be a nonzero field element");
    }
    DDTRow row;
    row.alpha = alpha;
    row.counts.assign(table.size(), 0);
    for (Bits x = 0; x < table.size(); ++x) {
        ++row.counts[table[x] ^ table[x ^ alpha]];
    }
    row.max_count = *std::max_element(row.counts.begin(), row.counts.end());
    return row;
}

DDTRow ddt_row(const UPoly& f, const FieldElem& alpha)
{
    require_same_field(*f.field(), *alpha.field());
    return ddt_row(value_table(f), alpha.bits());
}

DeltaResult delta_exhaustive_serial(const UPoly& f)
{
    const Field& F = *f.field();
    require_table_size(F, 14, "delta_exhaustive");
    const auto t = value_table(f);
    std::vector<AlphaRow> rows(F.max_element());
    std::vector<std::uint32_t> hist(t.size());
    for (Bits a = 1; a <= F.max_element(); ++a) {
        tally_row(t, a, hist, rows[a - 1]);
    }
    return merge_rows(rows);
}

DeltaResult delta_exhaustive(const UPoly& f)
{
    const Field& F = *f.field();
    require_table_size(F, 14, "delta_exhaustive");
    const auto t = value_table(f);
    std::vector<AlphaRow> rows(F.max_element());
    const auto count = static_cast<std::int64_t>(rows.size());
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp parallel num_threads(worker_count())
#endif
    {
        std::vector<std::uint32_t> hist(t.size());
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp for schedule(dynamic, 16)
#endif
        for (std::int64_t i = 0; i < count; ++i) {
            tally_row(t, static_cast<Bits>(i + 1), hist, rows[static_cast<std::size_t>(i)]);
        }
    }
    return merge_rows(rows);
}

std::uint64_t solutions_count(const UPoly& f, const FieldElem& alpha, const FieldElem& beta)
{
    require_same_field(*f.field(), *beta.field());
    const UPoly h = add_constant(d_alpha(f, alpha), beta.bits());
    if (h.is_zero()) {
        if (f.field()->degree() == 64) {
            throw AlgebraError("solutions_count: 2^64 solutions do not fit the result type");
        }
        return std::uint64_t{1} << f.field()->degree();
    }
    return count_roots_in_field(h);
}

// ---------------------------------------------------------- certification

namespace {

struct AlphaChoice {
    std::optional<MorseReport> report;
    std::uint64_t tries = 0;
};

void require_certifiable(const UPoly& f)
{
    const int m = f.degree();
    if (m < 4 || m % 2 != 0 || !degree_profile(static_cast<std::uint64_t>(m)).admissible) {
        throw AlgebraError("certify: degree " + std::to_string(m) + " is not admissible");
    }
    if (top_coeff(f, 1).is_zero()) {
        throw AlgebraError("certify: a1 must be nonzero");
    }
}

AlphaChoice choose_alpha(const UPoly& f, const CertifyOptions& opt)
{
    const Field& F = *f.field();
    const CounterStream rng(opt.seed, streams::alpha);
    AlphaChoice out;
    for (std::uint64_t i = 0; i < opt.alpha_tries; ++i) {
        ++out.tries;
        auto rep = morse_report(f, F.elem(rng.nonzero_element(F, i)));
        if (rep.certified()) {
            out.report = std::move(rep);
            return out;
        }
    }
    if (F.degree() <= 16) {
        for (Bits a = 1; a <= F.max_element(); ++a) {
            ++out.tries;
            auto rep = morse_report(f, F.elem(a));
            if (rep.certified()) {
                out.report = std::move(rep);
                return out;
            }
        }
    }
    return out;
}

bool beta_trial(const UPoly& D, const CounterStream& rng, std::uint64_t t, Bits& x0, Bits& beta)
{
    const Field& F = *D.field();
    x0 = rng.element(F, t);
    beta = D.eval(x0);
    const UPoly h = add_constant(D, beta);
    return count_roots_in_field(h) == static_cast<std::uint64_t>(D.degree()) && is_squarefree(h);
}

CertifyResult finalize(const UPoly& f, const AlphaChoice& ac, std::uint64_t beta_trials,
                       std::optional<std::uint64_t> hit, const CounterStream& rng, const UPoly& D)
{
    const Field& F = *f.field();
    CertifyResult res;
    res.alpha_trials = ac.tries;
    res.beta_trials = beta_trials;
    if (!hit) {
        res.note = "beta budget exhausted without a totally split value";
        return res;
    }
    Bits x0 = 0, beta = 0;
    beta_trial(D, rng, *hit, x0, beta);
    const FieldElem alpha = ac.report->alpha;
    const std::uint64_t count = solutions_count(f, alpha, F.elem(beta));
    const auto target = static_cast<std::uint64_t>(f.degree() - 2);
    if (count != target || !is_squarefree(add_constant(D, beta))) {
        throw InvariantViolation("certify: witness does not re-validate");
    }
    res.status = CertifyResult::Status::certified;
    res.witness = CertWitness{.n = F.degree(),
                              .f = f,
                              .alpha = alpha,
                              .beta = F.elem(beta),
                              .x0 = F.elem(x0),
                              .root_count = count,
                              .morse_report = *ac.report};
    const auto bounds = bounds_report(static_cast<std::uint64_t>(f.degree()));
    if (static_cast<std::uint64_t>(F.degree()) < bounds.n_threshold) {
        res.note = "exploratory: n is below the sufficient threshold " + std::to_string(bounds.n_threshold);
    }
    return res;
}

CertifyResult no_alpha(const AlphaChoice& ac)
{
    CertifyResult res;
    res.alpha_trials = ac.tries;
    res.note = "no alpha satisfying (I.a), (I.b) and (II) was found";
    return res;
}

}  // namespace

CertifyResult certify_max_serial(const UPoly& f, const CertifyOptions& opt)
{
    require_certifiable(f);
    const AlphaChoice ac = choose_alpha(f, opt);
    if (!ac.report) {
        return no_alpha(ac);
    }
    const UPoly D = d_alpha(f, ac.report->alpha);
    const CounterStream rng(opt.seed, streams::beta);
    for (std::uint64_t t = 0; t < opt.budget; ++t) {
        Bits x0, beta;
        if (beta_trial(D, rng, t, x0, beta)) {
            return finalize(f, ac, t + 1, t, rng, D);
        }
    }
    return finalize(f, ac, opt.budget, std::nullopt, rng, D);
}

CertifyResult certify_max(const UPoly& f, const CertifyOptions& opt)
{
    require_certifiable(f);
    const AlphaChoice ac = choose_alpha(f, opt);
    if (!ac.report) {
        return no_alpha(ac);
    }
    const UPoly D = d_alpha(f, ac.report->alpha);
    const CounterStream rng(opt.seed, streams::beta);
    const int workers = worker_count();
    const std::uint64_t chunk = 64 * static_cast<std::uint64_t>(workers);
    std::vector<char> ok(chunk);
    for (std::uint64_t base = 0; base < opt.budget; base += chunk) {
        const std::uint64_t len = std::min(chunk, opt.budget - base);
        std::fill(ok.begin(), ok.end(), 0);
        std::exception_ptr error;
        const auto slen = static_cast<std::int64_t>(len);
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
#endif
        for (std::int64_t i = 0; i < slen; ++i) {
            try {
                Bits x0, beta;
                ok[static_cast<std::size_t>(i)] = beta_trial(D, rng, base + static_cast<std::uint64_t>(i), x0, beta) ? 1 : 0;
            } catch (...) {
#if defined(APNCERT_HAVE_OPENMP)
#pragma omp critical(apncert_certify_error)
#endif
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
        if (error) {
            std::rethrow_exception(error);
        }
        const auto it = std::find(ok.begin(), ok.begin() + static_cast<std::ptrdiff_t>(len), 1);
        if (it != ok.begin() + static_cast<std::ptrdiff_t>(len)) {
            const std::uint64_t t = base + static_cast<std::uint64_t>(it - ok.begin());
            return finalize(f, ac, t + 1, t, rng, D);
        }
    }
    return finalize(f, ac, opt.budget, std::nullopt, rng, D);
}

}  // namespace apncert
