#pragma once

#include <string>
#include <string_view>

#include "copos/conic_program.hpp"

namespace copos {

/// Writes the program in SDPA sparse format as the dual-form problem
///   max F0 . Y  s.t.  Fi . Y = ci,  Y PSD,
/// where Y stacks the PSD blocks followed by one diagonal block holding the
/// nonnegative variables and the free variables split into positive and
/// negative parts. For a Min-sense program F0 is the negated objective.
std::string emit_sdpa(const ConicProgram& p);

/// Reads SDPA sparse text and returns the dual-form problem above as a
/// Max-sense program. Throws ParseError naming the offending line.
ConicProgram parse_sdpa(std::string_view text);

}  // namespace copos
