#pragma once

#include <stdexcept>
#include <string>

#include "entrobound/hermitian.hpp"

namespace entrobound {

/// Malformed matrix file: unreadable, invalid JSON, or wrong shape.
/// Distinct from the semantic validation errors raised on construction.
struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the matrix document {"dim": d, "entries": [[[re,im],...],...]}
/// with row-major d x d entries.
HermitianMatrix parse_matrix_json(const std::string& text);

HermitianMatrix load_matrix_json(const std::string& path);

std::string matrix_to_json(const HermitianMatrix& m);

void save_matrix_json(const std::string& path, const HermitianMatrix& m);

}  // namespace entrobound
