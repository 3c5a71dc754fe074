#include "apncert/rng.hpp"

#include <cstdlib>

#include "apncert/parallel.hpp"

namespace apncert {

UPoly random_poly(const FieldPtr& field, int m, std::uint64_t seed, bool nonzero_a1, std::uint64_t stream)
{
    if (m < 1) {
        throw AlgebraError("random_poly: degree must be positive");
    }
    const CounterStream rng(seed, stream);
    std::vector<Bits> c(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        const bool force = (k == m) || (nonzero_a1 && k == m - 1);
        c[static_cast<std::size_t>(k)] = force ? rng.nonzero_element(*field, static_cast<std::uint64_t>(k))
                                               : rng.element(*field, static_cast<std::uint64_t>(k));
    }
    return UPoly(field, std::move(c));
}

int worker_count()
{
    int requested = 0;
    if (const char* env = std::getenv("APNCERT_THREADS")) {
        requested = std::atoi(env);
    }
#if defined(APNCERT_HAVE_OPENMP)
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

}  // namespace apncert
