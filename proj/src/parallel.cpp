#include "cpsvm/parallel.hpp"

#include <omp.h>

namespace cpsvm::par {

namespace {
Mode g_mode = Mode::openmp;
}

Mode mode() { return g_mode; }

void set_mode(Mode m) { g_mode = m; }

void set_threads(int n) {
    if (n > 0) omp_set_num_threads(n);
}

int max_threads() { return omp_get_max_threads(); }

} // namespace cpsvm::par
