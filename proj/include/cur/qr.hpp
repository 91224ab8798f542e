#ifndef CUR_QR_HPP
#define CUR_QR_HPP

#include "cur/dense_matrix.hpp"
#include "cur/index_vector.hpp"

namespace cur {

// Column-pivoted QR: a(:, pivot) = q * t with q m x r orthonormal
// (r = min(m, n)) and t r x n upper trapezoidal whose diagonal dominates each
// trailing row block, |t_kk|^2 >= sum_{i=k..j} |t_ij|^2 for j > k.
struct PivotedQr {
    DenseMatrix q;
    DenseMatrix t;
    IndexVector pivot;
};

// Businger-Golub pivoting on residual column norms; ties broken towards the
// smallest original column index. Rank deficiency is allowed (zero diagonal
// tail in t).
PivotedQr pivoted_qr(const DenseMatrix& a);

// Unpivoted Householder QR of a tall (m >= n) matrix, kept in compact form.
// Backs least_squares_solve and the CUR core assembly.
class HouseholderQr {
public:
    explicit HouseholderQr(const DenseMatrix& a);

    Index rows() const { return factors_.rows(); }
    Index cols() const { return factors_.cols(); }

    // b (m x p) -> Q^T b in place.
    void apply_qt(DenseMatrix& b) const;

    // min_x ||a x - b||; throws SingularityError when a diagonal entry of R
    // falls below the rank tolerance.
    DenseMatrix solve(const DenseMatrix& b) const;

    // Smallest / largest |R_ii|.
    double diag_min_abs() const;
    double diag_max_abs() const;

    // Explicit thin Q (m x n).
    DenseMatrix thin_q() const;

private:
    DenseMatrix upper_solve(const DenseMatrix& qtb) const;

    DenseMatrix factors_; // R in the upper triangle, Householder vectors below
    std::vector<double> tau_;
};

} // namespace cur

#endif
