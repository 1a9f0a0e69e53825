#pragma once

#include <string>
#include <string_view>

#include "hamdec/ilp.hpp"

namespace hamdec::ilp {

// Writes the model in LP text format with a zero objective:
//
//   Minimize
//    obj: 0
//   Subject To
//    <name>: +1 z_0 -1 z_3 <= 4
//   Bounds
//    2 <= a_2 <= 6
//   Binaries
//    z_0 z_1 ...
//   Generals
//    a_2 ...
//   End
//
// Variables appear in id order, constraints in insertion order. A constraint
// without terms is written with a zero-coefficient placeholder term.
std::string export_lp(const IlpModel& model);

// Reads the subset of LP format produced by export_lp. Throws InputError on
// malformed input.
IlpModel parse_lp(std::string_view text);

}  // namespace hamdec::ilp
