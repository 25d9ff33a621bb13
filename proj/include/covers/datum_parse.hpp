#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "covers/cover_data.hpp"

namespace covers {

// Datum text syntax:
//   cyclic   m=5 N=4 a=1,1,1,2
//   abelian  A=2x6 N=4 a=(1,0),(1,1),(0,2),(0,3)
// Whitespace is ignored everywhere. Throws ParseError (with the byte
// position) on malformed text and ValidationError on well-formed but
// invalid data.
std::variant<CyclicCoverDatum, AbelianCoverDatum> parse_datum(
    std::string_view text);

std::string to_text(const CyclicCoverDatum& d);
std::string to_text(const AbelianCoverDatum& d);

// The a-tuple alone, e.g. "1,1,1,2" or "(1,0),(1,1),(0,2),(0,3)".
std::string format_monodromy(const CyclicCoverDatum& d);
std::string format_monodromy(const AbelianCoverDatum& d);

// Group descriptor used in tables: "5" for cyclic m = 5, "2x6" for
// Z/2 x Z/6.
std::string group_label(const CyclicCoverDatum& d);
std::string group_label(const AbelianCoverDatum& d);

}  // namespace covers
