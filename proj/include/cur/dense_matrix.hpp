#ifndef CUR_DENSE_MATRIX_HPP
#define CUR_DENSE_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "cur/errors.hpp"

namespace cur {

using Index = std::ptrdiff_t;

// Column-major dense real matrix. Entries supplied at construction must be
// finite; the (rows, cols) constructor zero-fills.
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}

    DenseMatrix(Index rows, Index cols);

    // Takes ownership of column-major data; throws ParameterError on a size
    // mismatch or any NaN/Inf entry.
    DenseMatrix(Index rows, Index cols, std::vector<double> data);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    double& operator()(Index i, Index j) { return data_[static_cast<std::size_t>(j * rows_ + i)]; }
    double operator()(Index i, Index j) const { return data_[static_cast<std::size_t>(j * rows_ + i)]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double* col(Index j) { return data_.data() + j * rows_; }
    const double* col(Index j) const { return data_.data() + j * rows_; }

    bool all_finite() const;

    static DenseMatrix identity(Index n);

    // a(row_indices, :) / a(:, col_indices), indices 1-based.
    DenseMatrix select_rows(const std::vector<Index>& one_based) const;
    DenseMatrix select_cols(const std::vector<Index>& one_based) const;

    // Leading column block as a copy.
    DenseMatrix leading_cols(Index k) const;

private:
    Index rows_, cols_;
    std::vector<double> data_;
};

DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// y = a * x and y = a^T * x
void matvec(const DenseMatrix& a, const double* x, double* y);
void matvec_transpose(const DenseMatrix& a, const double* x, double* y);

double max_abs(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);

} // namespace cur

#endif
