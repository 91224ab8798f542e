#ifndef CUR_SPARSE_MATRIX_HPP
#define CUR_SPARSE_MATRIX_HPP

#include <vector>

#include "cur/dense_matrix.hpp"

namespace cur {

// Compressed-sparse-column real matrix. Row indices are strictly increasing
// within each column; duplicate coordinates must be combined before
// construction (from_triplets sums them).
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}

    SparseMatrix(Index rows, Index cols, std::vector<Index> col_ptr,
                 std::vector<Index> row_idx, std::vector<double> values);

    struct Triplet {
        Index row, col; // 0-based
        double value;
    };

    static SparseMatrix from_triplets(Index rows, Index cols, std::vector<Triplet> triplets);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Index nnz() const { return static_cast<Index>(values_.size()); }

    const std::vector<Index>& col_ptr() const { return col_ptr_; }
    const std::vector<Index>& row_idx() const { return row_idx_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    // y = A x (y holds rows() entries), y = A^T x (y holds cols() entries).
    void matvec(const double* x, double* y) const;
    void matvec_transpose(const double* x, double* y) const;

    SparseMatrix select_cols(const std::vector<Index>& one_based) const;
    SparseMatrix select_rows(const std::vector<Index>& one_based) const;

    DenseMatrix to_dense() const;

private:
    Index rows_, cols_;
    std::vector<Index> col_ptr_;
    std::vector<Index> row_idx_;
    std::vector<double> values_;
};

} // namespace cur

#endif
