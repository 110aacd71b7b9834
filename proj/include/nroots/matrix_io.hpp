#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nroots/complex_matrix.hpp"

// Text matrix files.
//
//   line 1       dim (positive integer)
//   lines 2..    dim rows of dim entries
//
// An entry is "re im", two decimal reals separated by a single space.
// Entries are separated by a tab or by two or more spaces. Writers emit 17
// significant digits so that every double survives a round trip.

namespace nroots {

/// Throws ParseError with the 1-based line and column of the problem.
ComplexMatrix parse_matrix(std::string_view text);

/// Throws Error if the file cannot be read, ParseError if it is malformed.
ComplexMatrix load_matrix(const std::filesystem::path& path);

std::string format_matrix(const ComplexMatrix& m);

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

/// %.17g, as written by format_matrix.
std::string format_real(double value);

}  // namespace nroots
