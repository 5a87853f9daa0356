#pragma once

#include "wavecons/coeffs.hpp"
#include "wavecons/simulate.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wavecons {

using Report = std::vector<std::pair<std::string, std::string>>;

// t,I_<law>...,psi_left_<law>...,psi_right_<law>...,balance_<law>... at 17 digits.
void write_series(std::ostream& os, const DiagnosticsSeries& s);
// t,x,value
void write_grid(std::ostream& os, const CoeffGrid& g);
// key,value
void write_report(std::ostream& os, const Report& r);

// Writes to a file; filesystem errors surface as std::runtime_error with the OS message.
void write_series(const std::string& path, const DiagnosticsSeries& s);
void write_grid(const std::string& path, const CoeffGrid& g);
void write_report(const std::string& path, const Report& r);

// Reads back what write_series produced; probes are not part of the format.
DiagnosticsSeries read_series(std::istream& is);

std::string format_double(double v);

}  // namespace wavecons
