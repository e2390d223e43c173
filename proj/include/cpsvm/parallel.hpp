#ifndef CPSVM_PARALLEL_HPP
#define CPSVM_PARALLEL_HPP

namespace cpsvm::par {

// Execution mode for the hot kernels. Every kernel has a serial reference
// and an OpenMP variant that produce bit-identical results: parallel loops
// only make independent writes, and reductions run in a fixed order.
enum class Mode { serial, openmp };

Mode mode();
void set_mode(Mode m);

// 0 means "let OpenMP decide".
void set_threads(int n);
int max_threads();

} // namespace cpsvm::par

#endif
