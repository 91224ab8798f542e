#include "cur/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

namespace cur {

SparseMatrix::SparseMatrix(Index rows, Index cols, std::vector<Index> col_ptr,
                           std::vector<Index> row_idx, std::vector<double> values)
    : rows_(rows), cols_(cols), col_ptr_(std::move(col_ptr)),
      row_idx_(std::move(row_idx)), values_(std::move(values)) {
    if (rows <= 0 || cols <= 0) throw ParameterError("SparseMatrix: dimensions must be positive");
    if (col_ptr_.size() != static_cast<std::size_t>(cols_) + 1)
        throw ParameterError("SparseMatrix: column pointer array must have cols+1 entries");
    if (col_ptr_.front() != 0 || col_ptr_.back() != static_cast<Index>(values_.size()))
        throw ParameterError("SparseMatrix: column pointers must start at 0 and end at nnz");
    if (row_idx_.size() != values_.size())
        throw ParameterError("SparseMatrix: row index / value length mismatch");
    for (Index j = 0; j < cols_; ++j) {
        if (col_ptr_[j] > col_ptr_[j + 1])
            throw ParameterError("SparseMatrix: column pointers not monotone at column " +
                                 std::to_string(j + 1));
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
            if (row_idx_[p] < 0 || row_idx_[p] >= rows_)
                throw ParameterError("SparseMatrix: row index out of range");
            if (p > col_ptr_[j] && row_idx_[p] <= row_idx_[p - 1])
                throw ParameterError("SparseMatrix: row indices not strictly increasing in column " +
                                     std::to_string(j + 1));
            if (!std::isfinite(values_[p]))
                throw ParameterError("SparseMatrix: non-finite entry rejected");
        }
    }
}

SparseMatrix SparseMatrix::from_triplets(Index rows, Index cols, std::vector<Triplet> triplets) {
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    std::vector<Index> col_ptr(static_cast<std::size_t>(cols) + 1, 0);
    std::vector<Index> row_idx;
    std::vector<double> values;
    row_idx.reserve(triplets.size());
    values.reserve(triplets.size());
    for (std::size_t i = 0; i < triplets.size();) {
        std::size_t j = i;
        double sum = 0.0;
        while (j < triplets.size() && triplets[j].row == triplets[i].row &&
               triplets[j].col == triplets[i].col) {
            sum += triplets[j].value;
            ++j;
        }
        row_idx.push_back(triplets[i].row);
        values.push_back(sum);
        ++col_ptr[static_cast<std::size_t>(triplets[i].col) + 1];
        i = j;
    }
    for (Index j = 0; j < cols; ++j) col_ptr[j + 1] += col_ptr[j];
    return SparseMatrix(rows, cols, std::move(col_ptr), std::move(row_idx), std::move(values));
}

void SparseMatrix::matvec(const double* x, double* y) const {
    std::memset(y, 0, static_cast<std::size_t>(rows_) * sizeof(double));
    for (Index j = 0; j < cols_; ++j) {
        const double xj = x[j];
        if (xj == 0.0) continue;
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p)
            y[row_idx_[p]] += values_[p] * xj;
    }
}

void SparseMatrix::matvec_transpose(const double* x, double* y) const {
    for (Index j = 0; j < cols_; ++j) {
        double acc = 0.0;
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p)
            acc += values_[p] * x[row_idx_[p]];
        y[j] = acc;
    }
}

SparseMatrix SparseMatrix::select_cols(const std::vector<Index>& one_based) const {
    std::vector<Index> col_ptr(one_based.size() + 1, 0);
    std::vector<Index> row_idx;
    std::vector<double> values;
    for (std::size_t k = 0; k < one_based.size(); ++k) {
        Index j = one_based[k] - 1;
        if (j < 0 || j >= cols_) throw ParameterError("select_cols: index out of range");
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
            row_idx.push_back(row_idx_[p]);
            values.push_back(values_[p]);
        }
        col_ptr[k + 1] = static_cast<Index>(values.size());
    }
    return SparseMatrix(rows_, static_cast<Index>(one_based.size()), std::move(col_ptr),
                        std::move(row_idx), std::move(values));
}

SparseMatrix SparseMatrix::select_rows(const std::vector<Index>& one_based) const {
    // position of each original row in the selection, or -1
    std::vector<Index> place(static_cast<std::size_t>(rows_), -1);
    for (std::size_t k = 0; k < one_based.size(); ++k) {
        Index i = one_based[k] - 1;
        if (i < 0 || i >= rows_) throw ParameterError("select_rows: index out of range");
        place[static_cast<std::size_t>(i)] = static_cast<Index>(k);
    }
    std::vector<Triplet> trips;
    for (Index j = 0; j < cols_; ++j)
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p) {
            Index q = place[static_cast<std::size_t>(row_idx_[p])];
            if (q >= 0) trips.push_back({q, j, values_[p]});
        }
    return from_triplets(static_cast<Index>(one_based.size()), cols_, std::move(trips));
}

DenseMatrix SparseMatrix::to_dense() const {
    DenseMatrix out(rows_, cols_);
    for (Index j = 0; j < cols_; ++j)
        for (Index p = col_ptr_[j]; p < col_ptr_[j + 1]; ++p)
            out(row_idx_[p], j) = values_[p];
    return out;
}

} // namespace cur
