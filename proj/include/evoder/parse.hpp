#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "evoder/algebra.hpp"

namespace evoder {

// Matrix file format:
//
//   # optional comment lines start with '#'
//   3
//   2 1 0
//   -1 0 3
//   0 0 3
//
// The first non-comment line holds the dimension n; each of the next n
// non-blank, non-comment lines holds one row of n rationals written `p` or
// `p/q`. Errors are reported with 1-based row and entry positions.

/// Parses a square matrix. Throws ParseError.
RationalMatrix parse_matrix(std::string_view text);

/// Parses a structure matrix. Throws ParseError.
EvolutionAlgebra parse_algebra(std::string_view text);

/// Writes the matrix in the file format; parse_matrix(format_matrix(m)) == m.
std::string format_matrix(const RationalMatrix& m);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace evoder
