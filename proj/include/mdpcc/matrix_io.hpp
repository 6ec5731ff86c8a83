#pragma once

#include <iosfwd>
#include <string>

#include "mdpcc/poly_matrix.hpp"

namespace mdpcc {

// Matrix file format, shared between the CLI and the library:
//   line 1: `field <p>` or `field <p>^<m> <c0> <c1> ... <cm>` (ascending
//           monic modulus coefficients)
//   line 2: `matrix <rows> <cols>`
//   then rows*cols lines, row-major, one entry each: the ascending coefficient
//   list, space-separated residues for prime fields or `(c0,...,cm-1)` tuples
//   for extension fields; a single `0` is the zero polynomial. `#` starts a
//   comment, blank lines are ignored.
PolyMatrix read_matrix(std::istream& in);
PolyMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const PolyMatrix& m);
std::string matrix_to_string(const PolyMatrix& m);

std::string field_header(const Field& f);
std::string entry_tokens(const Poly& p);  // canonical coefficient list of one entry

}  // namespace mdpcc
