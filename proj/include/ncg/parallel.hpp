#pragma once

#include <cstddef>

namespace ncg {

/// Auto defers to the environment: NC_GRAPHENE_NO_PARALLEL=1 forces serial.
enum class Execution { Auto, Serial, Parallel };

bool parallel_disabled_by_env();
bool use_parallel(Execution exec);
int max_threads();

#if defined(_OPENMP)
#define NCG_PRAGMA(x) _Pragma(#x)
#define NCG_OMP_PARALLEL_FOR_IF(cond) NCG_PRAGMA(omp parallel for schedule(dynamic) if(cond))
#else
#define NCG_OMP_PARALLEL_FOR_IF(cond)
#endif

/// Calls fn(i) for i in [0, count). fn must not throw; results must be
/// written to per-index slots so output order never depends on scheduling.
template <typename Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn)
{
    const bool parallel = use_parallel(exec) && count > 1;
    const auto n = static_cast<std::ptrdiff_t>(count);
    NCG_OMP_PARALLEL_FOR_IF(parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        fn(static_cast<std::size_t>(i));
    }
    (void)parallel;
}

} // namespace ncg
