#pragma once

#include <iosfwd>
#include <string>

#include "mfh/exactla/matrix.hpp"
#include "mfh/exactnum/field.hpp"

namespace mfh {

/// Sparse text format: header "rows cols nnz", then one "i j v" line per
/// nonzero entry with 1-based indices. Lines starting with '#' are skipped.
void write_sparse(std::ostream& out, const IntMatrix& m);
std::string to_sparse_string(const IntMatrix& m);
/// Throws std::invalid_argument on malformed input or out-of-range indices.
IntMatrix read_sparse(std::istream& in);
IntMatrix parse_sparse(const std::string& text);
/// Accepts either the sparse format or a dense "rows cols" header followed
/// by rows*cols entries.
IntMatrix parse_matrix(const std::string& text);

/// Integer matrix mapped into a field through Z -> K.
Matrix<FieldScalar> to_field(const IntMatrix& m, const Field& field);

}  // namespace mfh
