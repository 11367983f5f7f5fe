#ifndef INVLIM_EXEC_HPP
#define INVLIM_EXEC_HPP

namespace invlim {

/// Execution mode for the enumeration kernels (point-map tables and induced
/// ring-function tables). Serial is the reference implementation; Parallel
/// fills the same preallocated index table with an OpenMP loop and is
/// bit-identical to Serial by construction.
enum class Exec { Serial, Parallel };

}  // namespace invlim

#endif
