#pragma once

#include <ostream>

#include "clustertilt/verification.hpp"

namespace clustertilt::cli {

// Human-readable verdict table.
void print_report(std::ostream& os, const VerificationReport& r);

}  // namespace clustertilt::cli
