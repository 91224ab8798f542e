#ifndef CUR_SVD_HPP
#define CUR_SVD_HPP

#include <vector>

#include "cur/dense_matrix.hpp"
#include "cur/linear_operator.hpp"
#include "cur/sparse_matrix.hpp"

namespace cur {

// Orthonormal-column factor of a singular value decomposition. Construction
// verifies ||B^T B - I||_max against the tolerance (default 1e-10 * sqrt(m)).
class SingularBasis {
public:
    explicit SingularBasis(DenseMatrix matrix, double orthonormality_tol = 0.0);

    const DenseMatrix& matrix() const { return matrix_; }
    Index rows() const { return matrix_.rows(); }
    Index cols() const { return matrix_.cols(); }
    double orthonormality_tol() const { return tol_; }

    // First k columns as a basis of their span.
    SingularBasis leading(Index k) const;

private:
    DenseMatrix matrix_;
    double tol_;
};

struct SvdResult {
    SingularBasis u;                     // m x k
    std::vector<double> singular_values; // non-increasing, >= 0
    SingularBasis v;                     // n x k

    Index rank() const { return static_cast<Index>(singular_values.size()); }

    // max_j ||A v_j - sigma_j u_j|| / sigma_1 (0 when sigma_1 = 0).
    double max_relative_residual(const LinearOperator& a) const;

    // Leading-k slice of this result.
    SvdResult truncate(Index k) const;
};

// k leading singular triplets. Dense inputs take a direct path (full SVD for
// small matrices, an eigendecomposition of the Gram matrix on the short side
// for large ones); sparse inputs and low-rank requests on large dense inputs
// run Golub-Kahan-Lanczos bidiagonalization with full reorthogonalization.
// max_iter = 0 picks a cap from k; exceeding it raises ConvergenceError.
// Left singular vectors are sign-normalized: largest-magnitude entry >= 0.
SvdResult truncated_svd(const DenseMatrix& a, Index k, double tol = 1e-10, Index max_iter = 0);
SvdResult truncated_svd(const SparseMatrix& a, Index k, double tol = 1e-10, Index max_iter = 0);

// All singular values of a dense matrix, non-increasing.
std::vector<double> singular_values(const DenseMatrix& a);

} // namespace cur

#endif
