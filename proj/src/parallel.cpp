#include "ncg/parallel.hpp"

#include <cstdlib>
#include <cstring>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ncg {

bool parallel_disabled_by_env()
{
    const char* value = std::getenv("NC_GRAPHENE_NO_PARALLEL");
    return value != nullptr && std::strcmp(value, "1") == 0;
}

bool use_parallel(Execution exec)
{
    switch (exec) {
    case Execution::Serial:
        return false;
    case Execution::Parallel:
        return true;
    case Execution::Auto:
        break;
    }
    return !parallel_disabled_by_env();
}

int max_threads()
{
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace ncg
