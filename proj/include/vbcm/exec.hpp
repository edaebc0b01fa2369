#pragma once

namespace vbcm::exec {

enum class Mode { serial, parallel };

// Process-wide execution mode for the dispatching kernel wrappers.
// Results are bit-identical in either mode; the switch exists for
// benchmarking and for forcing single-threaded runs.
Mode mode();
void set_mode(Mode m);

// Caps OpenMP threads (no-op when built without OpenMP). n <= 0 resets to
// the runtime default.
void set_max_threads(int n);
int max_threads();

// True when called from inside an OpenMP parallel region; used to avoid
// nested parallelism in the kernel wrappers.
bool in_parallel_region();

}  // namespace vbcm::exec
