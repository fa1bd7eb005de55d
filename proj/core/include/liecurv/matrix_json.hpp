#pragma once

#include <string>
#include <string_view>

#include "liecurv/algebra_kernel.hpp"

namespace liecurv {

// Matrix JSON form:
//   {"n": 2, "field": "real",    "entries": [1, 0, 0, 1]}
//   {"n": 2, "field": "complex", "entries": [[0, 1], [0, 0], [0, 0], [0, 1]]}
// Entries are row-major. Complex entries are [re, im] pairs; a plain number
// is accepted as a complex entry with zero imaginary part. Numbers are
// written in shortest round-trip form.

std::string to_json_string(const MatrixElement& m);

/// Throws ParseError on malformed text or schema violations, NonFiniteEntry
/// on non-finite values.
MatrixElement parse_matrix_json(std::string_view text);

}  // namespace liecurv
