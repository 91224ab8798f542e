#ifndef CUR_SRC_LANCZOS_IMPL_HPP
#define CUR_SRC_LANCZOS_IMPL_HPP

#include <vector>

#include "cur/linear_operator.hpp"

namespace cur::detail {

struct LanczosSvd {
    std::vector<double> sigma;     // k values, non-increasing
    std::vector<double> u;         // m x k column-major
    std::vector<double> v;         // n x k column-major
};

// Golub-Kahan-Lanczos bidiagonalization with full reorthogonalization and
// deterministic restarts on breakdown. max_iter caps the subspace size;
// 0 picks a default from k. Throws ConvergenceError when the cap is hit
// before the k leading triplets have residuals below tol * sigma_1.
LanczosSvd lanczos_svd(const LinearOperator& a, Index k, double tol, Index max_iter);

} // namespace cur::detail

#endif
