#ifndef CUR_LINEAR_OPERATOR_HPP
#define CUR_LINEAR_OPERATOR_HPP

#include "cur/dense_matrix.hpp"
#include "cur/sparse_matrix.hpp"

namespace cur {

// Matrix-free view of a real linear map; the iterative kernels (spectral
// norm, Lanczos SVD) see every operand through this interface.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;
    virtual Index rows() const = 0;
    virtual Index cols() const = 0;
    virtual void apply(const double* x, double* y) const = 0;           // y = A x
    virtual void apply_transpose(const double* x, double* y) const = 0; // y = A^T x
};

class DenseOperator final : public LinearOperator {
public:
    explicit DenseOperator(const DenseMatrix& a) : a_(a) {}
    Index rows() const override { return a_.rows(); }
    Index cols() const override { return a_.cols(); }
    void apply(const double* x, double* y) const override { matvec(a_, x, y); }
    void apply_transpose(const double* x, double* y) const override { matvec_transpose(a_, x, y); }

private:
    const DenseMatrix& a_;
};

class SparseOperator final : public LinearOperator {
public:
    explicit SparseOperator(const SparseMatrix& a) : a_(a) {}
    Index rows() const override { return a_.rows(); }
    Index cols() const override { return a_.cols(); }
    void apply(const double* x, double* y) const override { a_.matvec(x, y); }
    void apply_transpose(const double* x, double* y) const override { a_.matvec_transpose(x, y); }

private:
    const SparseMatrix& a_;
};

} // namespace cur

#endif
