#include "cur/dense_matrix.hpp"

#include <cmath>
#include <string>

#include <Eigen/Core>

namespace cur {

namespace {

using EMap = Eigen::Map<Eigen::MatrixXd>;
using CEMap = Eigen::Map<const Eigen::MatrixXd>;

} // namespace

DenseMatrix::DenseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw ParameterError("DenseMatrix: dimensions must be positive, got " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
}

DenseMatrix::DenseMatrix(Index rows, Index cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows <= 0 || cols <= 0)
        throw ParameterError("DenseMatrix: dimensions must be positive");
    if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw ParameterError("DenseMatrix: data length " + std::to_string(data_.size()) +
                             " != rows*cols = " + std::to_string(rows * cols));
    for (double v : data_)
        if (!std::isfinite(v))
            throw ParameterError("DenseMatrix: non-finite entry rejected");
}

bool DenseMatrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

DenseMatrix DenseMatrix::identity(Index n) {
    DenseMatrix a(n, n);
    for (Index i = 0; i < n; ++i) a(i, i) = 1.0;
    return a;
}

DenseMatrix DenseMatrix::select_rows(const std::vector<Index>& one_based) const {
    DenseMatrix out(static_cast<Index>(one_based.size()), cols_);
    for (Index j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < one_based.size(); ++i) {
            Index r = one_based[i] - 1;
            if (r < 0 || r >= rows_) throw ParameterError("select_rows: index out of range");
            out(static_cast<Index>(i), j) = (*this)(r, j);
        }
    return out;
}

DenseMatrix DenseMatrix::select_cols(const std::vector<Index>& one_based) const {
    DenseMatrix out(rows_, static_cast<Index>(one_based.size()));
    for (std::size_t j = 0; j < one_based.size(); ++j) {
        Index c = one_based[j] - 1;
        if (c < 0 || c >= cols_) throw ParameterError("select_cols: index out of range");
        for (Index i = 0; i < rows_; ++i) out(i, static_cast<Index>(j)) = (*this)(i, c);
    }
    return out;
}

DenseMatrix DenseMatrix::leading_cols(Index k) const {
    if (k <= 0 || k > cols_) throw ParameterError("leading_cols: k out of range");
    DenseMatrix out(rows_, k);
    std::copy(data(), data() + rows_ * k, out.data());
    return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix out(a.cols(), a.rows());
    EMap(out.data(), a.cols(), a.rows()) = CEMap(a.data(), a.rows(), a.cols()).transpose();
    return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw ParameterError("matmul: inner dimensions differ");
    DenseMatrix out(a.rows(), b.cols());
    EMap(out.data(), a.rows(), b.cols()).noalias() =
        CEMap(a.data(), a.rows(), a.cols()) * CEMap(b.data(), b.rows(), b.cols());
    return out;
}

void matvec(const DenseMatrix& a, const double* x, double* y) {
    Eigen::Map<Eigen::VectorXd>(y, a.rows()).noalias() =
        CEMap(a.data(), a.rows(), a.cols()) * Eigen::Map<const Eigen::VectorXd>(x, a.cols());
}

void matvec_transpose(const DenseMatrix& a, const double* x, double* y) {
    Eigen::Map<Eigen::VectorXd>(y, a.cols()).noalias() =
        CEMap(a.data(), a.rows(), a.cols()).transpose() *
        Eigen::Map<const Eigen::VectorXd>(x, a.rows());
}

double max_abs(const DenseMatrix& a) {
    return CEMap(a.data(), a.rows(), a.cols()).cwiseAbs().maxCoeff();
}

double frobenius_norm(const DenseMatrix& a) {
    return CEMap(a.data(), a.rows(), a.cols()).norm();
}

} // namespace cur
