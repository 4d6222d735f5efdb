#include "sqrtx/matrix_io.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sqrtx/errors.hpp"
#include "sqrtx/json_writer.hpp"

namespace sqrtx {
namespace {

bool is_ignorable(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;  // blank or whitespace-only
}

// Pulls the next content-bearing line; false at end of input.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!is_ignorable(line)) return true;
  }
  return false;
}

std::size_t parse_dim(const std::string& line) {
  std::istringstream ss(line);
  long long r = 0;
  if (!(ss >> r) || r < 1) {
    throw ParseError("matrix file: expected a positive dimension, got '" +
                     line + "'");
  }
  std::string extra;
  if (ss >> extra) {
    throw ParseError("matrix file: dimension line has trailing content '" +
                     extra + "'");
  }
  return static_cast<std::size_t>(r);
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) {
    throw ParseError("matrix file: missing dimension line");
  }
  const std::size_t r = parse_dim(line);

  Matrix m(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!next_data_line(in, line)) {
      throw ParseError("matrix file: expected " + std::to_string(r) +
                       " rows, found " + std::to_string(i));
    }
    std::istringstream ss(line);
    for (std::size_t j = 0; j < r; ++j) {
      if (!(ss >> m(i, j))) {
        throw ParseError("matrix file: row " + std::to_string(i + 1) +
                         " has fewer than " + std::to_string(r) + " entries");
      }
    }
    std::string extra;
    if (ss >> extra) {
      throw ParseError("matrix file: row " + std::to_string(i + 1) +
                       " has more than " + std::to_string(r) + " entries");
    }
  }
  if (next_data_line(in, line)) {
    throw ParseError("matrix file: unexpected content after " +
                     std::to_string(r) + " rows: '" + line + "'");
  }
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open matrix file '" + path + "'");
  }
  try {
    return read_matrix(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.dim() << "\n";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j != 0) out << " ";
      out << JsonWriter::format_double(m(i, j));
    }
    out << "\n";
  }
}

void write_matrix(std::ostream& out, const SymMatrix& m) {
  write_matrix(out, m.mat());
}

}  // namespace sqrtx
