/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over cyclotomic fields.
 */
#pragma once

#include "qsp/scalars.hpp"

#include <vector>

namespace qsp {

using Matrix = std::vector<std::vector<CycNum>>;

Matrix zero_matrix(size_t rows, size_t cols);
Matrix transpose(const Matrix& a);
Matrix matmul(const Matrix& a, const Matrix& b);

/**
 * Reduced row echelon form in place.  Pivot columns are chosen left to
 * right, so they are the first linearly independent columns.  Returns the
 * pivot column indices; rows beyond the rank are zero afterwards.
 */
std::vector<int> rref(Matrix& a);

/// Rank of a (copied) matrix.
int rank(Matrix a);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& a);

}  // namespace qsp
