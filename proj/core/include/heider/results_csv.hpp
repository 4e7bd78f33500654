#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heider/sweep.hpp"

namespace heider {

inline constexpr char kResultsCsvHeader[] =
    "beta1,beta2,n,trials,balanced,jammed,undecided,p_hb,std_err";

/// Format a real with 6 significant digits ("%.6g"), the precision of every
/// real column in the results CSV.
std::string format_g6(double v);

// The emitted bytes are a pure function of the cell list: fixed header,
// one row per cell in the given order, "%.6g" reals, newline-terminated.
void write_results_csv(std::ostream& out, const std::vector<CellEstimate>& cells);
void write_results_csv(const std::string& path, const std::vector<CellEstimate>& cells);

std::vector<CellEstimate> read_results_csv(std::istream& in,
                                           const std::string& source = "<results csv>");
std::vector<CellEstimate> read_results_csv(const std::string& path);

}  // namespace heider
