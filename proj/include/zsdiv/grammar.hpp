#pragma once

#include <string>

#include "zsdiv/group.hpp"
#include "zsdiv/quadfield.hpp"
#include "zsdiv/zerosum.hpp"

namespace zsdiv {

// Group specs look like "Z4" or "Z2xZ2".
FiniteAbelianGroup parse_group_spec(const std::string& text);
std::string format_group(const FiniteAbelianGroup& g);

// Elements print as coordinate tuples, e.g. "(1,0)"; rank-1 groups may use a
// bare integer on input.
GroupElement parse_group_element(const FiniteAbelianGroup& g, const std::string& text);
std::string format_group_element(const GroupElement& x);

// Sequence literals: "(1)^1,(3)^1,(2)^2", or "1^1,3^1,2^2" over cyclic
// groups; "^1" may be omitted.
ZSequence parse_sequence(const FiniteAbelianGroup& g, const std::string& text);
std::string format_sequence(const ZSequence& seq);

std::string format_selector(const Selector& sel);

// Field elements: "a", "a+b*w", "a+b*sqrt", "a+b*sqrt(d)"; the sqrt form is
// converted into the omega basis.
QElement parse_qelement(const QuadField& field, const std::string& text);
// omega-basis rendering, e.g. "3+1*w".
std::string format_qelement(const QElement& x);
// sqrt-basis rendering; uses "(u+v*sqrt(d))/2" when coordinates are half
// integers.
std::string format_qelement_sqrt(const QElement& x);

std::string format_ideal(const QIdeal& ideal);

} // namespace zsdiv
