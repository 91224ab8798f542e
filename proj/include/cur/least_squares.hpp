#ifndef CUR_LEAST_SQUARES_HPP
#define CUR_LEAST_SQUARES_HPP

#include "cur/dense_matrix.hpp"

namespace cur {

// Returns X minimizing ||a X - b|| column-wise via Householder QR; exact
// solve for square nonsingular a. Throws SingularityError when a is
// numerically rank deficient.
DenseMatrix least_squares_solve(const DenseMatrix& a, const DenseMatrix& b);

} // namespace cur

#endif
