#ifndef TOPOPLAN_PARALLEL_HPP
#define TOPOPLAN_PARALLEL_HPP

namespace topoplan {

// Resolves the worker count for a parallel kernel. `requested > 0` wins,
// otherwise the TOPOPLAN_THREADS environment variable (0 = auto), otherwise
// the OpenMP default. Always >= 1; returns 1 when built without OpenMP.
int resolve_threads(int requested = 0);

}  // namespace topoplan

#endif  // TOPOPLAN_PARALLEL_HPP
