#pragma once

namespace wavefront {

/// Serial runs the reference loop; Parallel runs the OpenMP kernel. Both
/// produce identical results element for element.
enum class Exec { Serial, Parallel };

}  // namespace wavefront
