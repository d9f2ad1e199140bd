#pragma once

namespace cmlt {

// Worker count used by the OpenMP kernels: CM_THREADS if set and positive,
// otherwise the OpenMP default (logical cores).
int worker_count();

// Override for the current process; 0 restores the default.
void set_worker_count(int n);

} // namespace cmlt
