#ifndef CUR_SPECTRAL_NORM_HPP
#define CUR_SPECTRAL_NORM_HPP

#include "cur/dense_matrix.hpp"
#include "cur/linear_operator.hpp"
#include "cur/sparse_matrix.hpp"

namespace cur {

// Largest singular value to relative tolerance tol, via Lanczos
// bidiagonalization on the operator. max_iter = 0 picks a cap from the
// dimensions; exceeding it raises ConvergenceError.
double spectral_norm(const LinearOperator& a, double tol = 1e-8, Index max_iter = 0);
double spectral_norm(const DenseMatrix& a, double tol = 1e-8, Index max_iter = 0);
double spectral_norm(const SparseMatrix& a, double tol = 1e-8, Index max_iter = 0);

} // namespace cur

#endif
