#pragma once

namespace casimir {

/// Execution policy for the data-parallel kernels (Matsubara sums, curve
/// rows).  Both policies produce bit-identical results: the parallel path
/// stores per-item terms and reduces them in index order.
enum class Exec { Serial, Parallel };

/// Maximum worker threads the parallel policy may use (1 without OpenMP).
int max_threads();

/// Clamp the OpenMP thread count (no-op without OpenMP).
void set_num_threads(int n);

}  // namespace casimir
