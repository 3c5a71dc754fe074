#pragma once

#if defined(APNCERT_HAVE_OPENMP)
#include <omp.h>
#endif

namespace apncert {

/// Worker count for the parallel kernels: APNCERT_THREADS when set and
/// positive, otherwise the OpenMP default; 1 in serial builds. Results never
/// depend on this value.
int worker_count();

inline bool openmp_enabled()
{
#if defined(APNCERT_HAVE_OPENMP)
    return true;
#else
    return false;
#endif
}

}  // namespace apncert
