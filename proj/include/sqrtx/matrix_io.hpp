#pragma once

#include <iosfwd>
#include <string>

#include "sqrtx/matrix.hpp"
#include "sqrtx/sym_matrix.hpp"

namespace sqrtx {

// Plain-text matrix format: the first non-comment line holds the dimension
// r, followed by exactly r data lines of r decimal numbers each. Lines
// whose first non-blank character is '#' are comments; blank lines are
// skipped. Malformed input throws ParseError.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

// Writes the same format at full double precision (17 significant digits),
// so write-then-read reproduces every entry exactly.
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix(std::ostream& out, const SymMatrix& m);

}  // namespace sqrtx
