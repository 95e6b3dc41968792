#pragma once

// Scalar precision for the whole model stack. Default is 32-bit; defining
// RTX_REAL64 (a separate library/target, never mixed into the same binary)
// switches everything to 64-bit so gradient checks can run at tight
// tolerances.

namespace rtx {

#ifdef RTX_REAL64
using real = double;
#else
using real = float;
#endif

} // namespace rtx
