#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stellar::par {

/// True when the build has OpenMP and more than one thread is available.
/// Setting STELLAR_SERIAL=1 in the environment forces the serial paths.
inline bool available() {
#ifdef _OPENMP
    if (std::getenv("STELLAR_SERIAL") != nullptr) return false;
    return omp_get_max_threads() > 1;
#else
    return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace stellar::par
