#pragma once

#include <iosfwd>
#include <string>

#include "heider/matrix.hpp"

namespace heider {

// Signed-graph text format:
//
//   n m
//   i j s        (m lines)
//
// with 0-based node indices, i != j, and s in {-1, +1}. The weighted variant
// is identical except s is a real in [-1, +1]. Pairs not listed are 0
// (absent / indeterminate). Duplicate pairs, indices out of [0, n), self
// loops, and out-of-range values are parse errors; so is trailing garbage.

SignMatrix read_sign_graph(std::istream& in, const std::string& source = "<sign graph>");
void write_sign_graph(std::ostream& out, const SignMatrix& s);

WeightMatrix read_weight_graph(std::istream& in, const std::string& source = "<weight graph>");
void write_weight_graph(std::ostream& out, const WeightMatrix& w);

}  // namespace heider
