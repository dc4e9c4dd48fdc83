#pragma once

namespace nok {

/// Execution policy for the data-parallel kernels. Serial is the reference
/// path; Parallel uses OpenMP and must produce identical results (all
/// arithmetic is exact, so reduction order cannot matter).
enum class Exec { Serial, Parallel };

/// Number of OpenMP threads available to Parallel kernels (1 without OpenMP).
int max_threads() noexcept;

}  // namespace nok
