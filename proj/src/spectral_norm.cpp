#include "cur/spectral_norm.hpp"

#include <algorithm>

#include "lanczos_impl.hpp"

namespace cur {

double spectral_norm(const LinearOperator& a, double tol, Index max_iter) {
    const Index minmn = std::min(a.rows(), a.cols());
    const Index cap = max_iter > 0 ? max_iter : std::min<Index>(minmn, 220);
    auto lan = detail::lanczos_svd(a, 1, tol, cap);
    return lan.sigma.front();
}

double spectral_norm(const DenseMatrix& a, double tol, Index max_iter) {
    DenseOperator op(a);
    return spectral_norm(op, tol, max_iter);
}

double spectral_norm(const SparseMatrix& a, double tol, Index max_iter) {
    SparseOperator op(a);
    return spectral_norm(op, tol, max_iter);
}

} // namespace cur
