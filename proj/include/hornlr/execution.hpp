#pragma once

namespace hornlr {

/// Selects between the OpenMP kernel and its serial reference. Both paths
/// return identical results; the serial one is kept for testing.
enum class Execution { serial, parallel };

/// Number of OpenMP workers used by parallel kernels.
int worker_count();
/// Sets the worker count (values < 1 restore the runtime default).
void set_worker_count(int n);

}  // namespace hornlr
