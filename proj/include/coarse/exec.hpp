#pragma once

namespace coarse {

// Selects the OpenMP kernel or the serial reference loop. Both must produce
// identical results; the serial path is kept for tests and benchmarks.
enum class Exec { serial, parallel };

}  // namespace coarse
