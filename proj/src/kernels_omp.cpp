#include "symspec/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symspec {

namespace {

int g_default_threads = 0;

}  // namespace

void set_thread_count(int threads)
{
#ifdef _OPENMP
    if (g_default_threads == 0)
        g_default_threads = omp_get_max_threads();
    omp_set_num_threads(threads > 0 ? threads : g_default_threads);
#else
    (void)threads;
    (void)g_default_threads;
#endif
}

int thread_count()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<double> block_sums_parallel(const TermTables& tables, int first, int last)
{
    if (last < first)
        return {};
    const int count = last - first + 1;
    std::vector<double> out(static_cast<std::size_t>(count));
    // larger weights hold more partitions; dynamic scheduling balances that
#pragma omp parallel for schedule(dynamic, 4)
    for (int k = 0; k < count; ++k)
        out[static_cast<std::size_t>(k)] = block_sum(tables, first + k);
    return out;
}

}  // namespace symspec
