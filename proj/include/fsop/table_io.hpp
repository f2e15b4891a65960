#pragma once

#include "fsop/coeffs.hpp"

#include <iosfwd>
#include <string>

namespace fsop {

// Plain-text columnar cache:
//
//   # fsop freud-table v1
//   # precision_digits <d>
//   # method <tag>
//   n,a_sq,norm_sq,gamma
//   0,0,1.8128...e+00,...
//
// Values are written with `precision_digits` significant digits. Loading and
// re-saving reproduces the file byte for byte.
void write_table(std::ostream& os, const FreudTable& t);
FreudTable read_table(std::istream& is);

void save_table(const std::string& path, const FreudTable& t);
FreudTable load_table(const std::string& path);

}  // namespace fsop
