#pragma once

// Stream text grammar:  SIZE ":" PRE "|" PER
//   SIZE ≤ 10  : PRE and PER are digit words, e.g. "4:0033|1", "2:|01"
//   SIZE > 10  : comma-separated integers in brackets, e.g. "12:[0,11]|[3]"
// An empty PRE may be written as nothing or as "[]".

#include <string>
#include <string_view>

#include "seaorder/streams.hpp"

namespace seaorder {

UtilityStream parse_stream(std::string_view text);

// Canonical text; parse_stream(render(s)) == s.
std::string render(const UtilityStream& s);

// Cycle notation, e.g. "(0 3)(1 4 2)"; "()" for the identity.
std::string render(const FiniteSupportPermutation& pi);

// "[a; b | t]"
std::string render(const NestedStream& x);

}  // namespace seaorder
