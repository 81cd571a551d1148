#include "topoplan/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace topoplan {

int resolve_threads(int requested) {
#ifdef _OPENMP
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TOPOPLAN_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    return omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

}  // namespace topoplan
