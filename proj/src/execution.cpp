#include "hornlr/execution.hpp"

#include <omp.h>

namespace hornlr {

namespace {
int g_default_workers = omp_get_max_threads();
}

int worker_count() { return omp_get_max_threads(); }

void set_worker_count(int n) { omp_set_num_threads(n >= 1 ? n : g_default_workers); }

}  // namespace hornlr
