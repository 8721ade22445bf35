#pragma once

#include <istream>
#include <string>

#include "ctxkit/linalg.hpp"

namespace ctxkit {

// Named states reachable from the command line. "mixed" is the maximally
// mixed state at the caller's native dimension; the others have a fixed
// dimension of their own (xi: 16, phi+: 4, maxent3x3: 9, magicopt: 3).
DensityMatrix builtin_state(const std::string& tag, int native_dim);

// State file format:
//   dim <d>
//   pure (c1, c2, ..., cd)        -- normalized automatically
// or
//   dim <d>
//   mixed
//   <d rows of d complex entries> -- must form a valid density matrix
// Entries accept decimal and complex literals such as 0.5, -1, 2i, 1-0.5i.
DensityMatrix parse_state(std::istream& in);
DensityMatrix parse_state_file(const std::string& path);

} // namespace ctxkit
