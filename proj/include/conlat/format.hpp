#pragma once

#include <string>

#include "conlat/concept.hpp"

namespace conlat {

/// Rounds to 12 significant digits, then returns the shortest decimal string
/// that reads back to that rounded value.
std::string format_real(double x);

/// The double that format_real(x) spells.
double round_real(double x);

/// Compact one-line forms used for diagram labels and messages, e.g.
/// "{Color:Black, Size:[0.1,0.3]}". The universal concept prints as "{}".
std::string to_string(const Property& p);
std::string to_string(const Concept& c);

}  // namespace conlat
