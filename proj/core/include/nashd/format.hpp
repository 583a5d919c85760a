#pragma once

#include <string>

namespace nashd {

// Shortest decimal form that parses back to the same double (std::to_chars).
// All file output (.nfg payoffs, CSV columns) goes through this so that
// serialization is byte-deterministic and round-trips exactly.
std::string format_double(double value);

}  // namespace nashd
