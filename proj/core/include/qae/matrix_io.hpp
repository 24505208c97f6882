#pragma once

// Standalone D/E files.
//
// Real:                      Complex:
//   m                          COMPLEX
//   <m rows of D>              m
//   <blank line>               <m rows of D, 2m numbers: re im re im ...>
//   <m rows of E>              <blank line>
//                              <m rows of E, interleaved the same way>
//
// `#` comments and blank lines are ignored when parsing.

#include <string>
#include <string_view>

#include "qae/linalg.hpp"

namespace qae {

struct MatrixPair {
  ComplexMatrix D;
  ComplexMatrix E;
  bool complex = false;
};

/// Throws ParseError (with line number) or ShapeMismatch.
MatrixPair parse_matrix_pair(std::string_view text);

/// Writes the complex variant iff `complex` is set.
std::string to_matrix_text(const ComplexMatrix& d, const ComplexMatrix& e, bool complex);

}  // namespace qae
