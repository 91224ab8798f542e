#include "cur/svd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "lanczos_impl.hpp"

namespace cur {

namespace {

using CEMap = Eigen::Map<const Eigen::MatrixXd>;
using EMap = Eigen::Map<Eigen::MatrixXd>;

// Largest-magnitude entry of each left singular vector made non-negative,
// ties to the smallest row; v flips together with u so u * diag(s) * v^T is
// unchanged.
void normalize_signs(DenseMatrix& u, DenseMatrix& v) {
    for (Index j = 0; j < u.cols(); ++j) {
        Index arg = 0;
        double best = std::abs(u(0, j));
        for (Index i = 1; i < u.rows(); ++i) {
            const double a = std::abs(u(i, j));
            if (a > best) {
                best = a;
                arg = i;
            }
        }
        if (u(arg, j) < 0.0) {
            for (Index i = 0; i < u.rows(); ++i) u(i, j) = -u(i, j);
            for (Index i = 0; i < v.rows(); ++i) v(i, j) = -v(i, j);
        }
    }
}

struct RawSvd {
    DenseMatrix u;
    std::vector<double> sigma;
    DenseMatrix v;
};

RawSvd dense_direct(const DenseMatrix& a, Index k) {
    const Index m = a.rows(), n = a.cols();
    CEMap am(a.data(), m, n);
    Eigen::MatrixXd eu, ev;
    Eigen::VectorXd es;
    if (std::min(m, n) <= 32) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(am, Eigen::ComputeThinU | Eigen::ComputeThinV);
        eu = svd.matrixU();
        ev = svd.matrixV();
        es = svd.singularValues();
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(am, Eigen::ComputeThinU | Eigen::ComputeThinV);
        eu = svd.matrixU();
        ev = svd.matrixV();
        es = svd.singularValues();
    }
    RawSvd out{DenseMatrix(m, k), std::vector<double>(static_cast<std::size_t>(k)),
               DenseMatrix(n, k)};
    EMap(out.u.data(), m, k) = eu.leftCols(k);
    EMap(out.v.data(), n, k) = ev.leftCols(k);
    for (Index j = 0; j < k; ++j) out.sigma[static_cast<std::size_t>(j)] = es(j);
    return out;
}

// Eigendecomposition of the Gram matrix on the short side; the long-side
// factor is recovered as A^T U Sigma^{-1} (or A V Sigma^{-1}) and
// re-orthonormalized in order. Requires the requested spectrum to stay well
// above sqrt(eps) * sigma_1; callers fall back to the direct path otherwise.
bool dense_gram(const DenseMatrix& a, Index k, RawSvd& out) {
    const Index m = a.rows(), n = a.cols();
    CEMap am(a.data(), m, n);
    const bool rows_short = m <= n;
    const Index s = rows_short ? m : n;
    Eigen::MatrixXd gram(s, s);
    if (rows_short)
        gram.noalias() = am * am.transpose();
    else
        gram.noalias() = am.transpose() * am;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    if (eig.info() != Eigen::Success) return false;

    // eigenvalues ascending; take the top k
    Eigen::VectorXd lam = eig.eigenvalues();
    const double lmax = std::max(lam(s - 1), 0.0);
    std::vector<double> sigma(static_cast<std::size_t>(k));
    for (Index j = 0; j < k; ++j) {
        const double l = std::max(lam(s - 1 - j), 0.0);
        sigma[static_cast<std::size_t>(j)] = std::sqrt(l);
        if (l < 1e-16 * lmax) return false; // squared-spectrum resolution limit
    }

    Eigen::MatrixXd short_vecs(s, k);
    for (Index j = 0; j < k; ++j) short_vecs.col(j) = eig.eigenvectors().col(s - 1 - j);

    Eigen::MatrixXd long_vecs(rows_short ? n : m, k);
    if (rows_short)
        long_vecs.noalias() = am.transpose() * short_vecs;
    else
        long_vecs.noalias() = am * short_vecs;
    for (Index j = 0; j < k; ++j) {
        // modified Gram-Schmidt pass keeps the recovered side orthonormal
        for (Index l = 0; l < j; ++l)
            long_vecs.col(j) -= long_vecs.col(l).dot(long_vecs.col(j)) * long_vecs.col(l);
        const double nrm = long_vecs.col(j).norm();
        if (nrm <= 0.0) return false;
        long_vecs.col(j) /= nrm;
    }

    out.u = DenseMatrix(m, k);
    out.v = DenseMatrix(n, k);
    out.sigma = std::move(sigma);
    if (rows_short) {
        EMap(out.u.data(), m, k) = short_vecs;
        EMap(out.v.data(), n, k) = long_vecs;
    } else {
        EMap(out.u.data(), m, k) = long_vecs;
        EMap(out.v.data(), n, k) = short_vecs;
    }
    return true;
}

SvdResult finish(RawSvd raw) {
    normalize_signs(raw.u, raw.v);
    return SvdResult{SingularBasis(std::move(raw.u)), std::move(raw.sigma),
                     SingularBasis(std::move(raw.v))};
}

RawSvd from_lanczos(detail::LanczosSvd lan, Index m, Index n, Index k) {
    RawSvd out{DenseMatrix(m, k), std::move(lan.sigma), DenseMatrix(n, k)};
    std::copy(lan.u.begin(), lan.u.end(), out.u.data());
    std::copy(lan.v.begin(), lan.v.end(), out.v.data());
    return out;
}

void check_rank(Index k, Index m, Index n) {
    if (k < 1 || k > std::min(m, n))
        throw ParameterError("truncated_svd: rank " + std::to_string(k) +
                             " outside [1, min(rows, cols)] = [1, " +
                             std::to_string(std::min(m, n)) + "]");
}

} // namespace

SingularBasis::SingularBasis(DenseMatrix matrix, double orthonormality_tol)
    : matrix_(std::move(matrix)), tol_(orthonormality_tol) {
    const Index m = matrix_.rows(), k = matrix_.cols();
    if (k > m) throw ParameterError("SingularBasis: more columns than rows");
    if (tol_ <= 0.0) tol_ = 1e-10 * std::sqrt(static_cast<double>(m));
    CEMap b(matrix_.data(), m, k);
    Eigen::MatrixXd gram = b.transpose() * b;
    double dev = 0.0;
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            dev = std::max(dev, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
    if (dev > tol_)
        throw ParameterError("SingularBasis: columns deviate from orthonormality by " +
                             std::to_string(dev) + " (tol " + std::to_string(tol_) + ")");
}

SingularBasis SingularBasis::leading(Index k) const {
    return SingularBasis(matrix_.leading_cols(k), tol_);
}

double SvdResult::max_relative_residual(const LinearOperator& a) const {
    const Index m = a.rows(), n = a.cols();
    if (singular_values.empty() || singular_values.front() == 0.0) return 0.0;
    std::vector<double> av(static_cast<std::size_t>(m));
    double worst = 0.0;
    for (Index j = 0; j < rank(); ++j) {
        a.apply(v.matrix().col(j), av.data());
        double r2 = 0.0;
        for (Index i = 0; i < m; ++i) {
            const double d = av[static_cast<std::size_t>(i)] -
                             singular_values[static_cast<std::size_t>(j)] * u.matrix()(i, j);
            r2 += d * d;
        }
        worst = std::max(worst, std::sqrt(r2));
    }
    (void)n;
    return worst / singular_values.front();
}

SvdResult SvdResult::truncate(Index k) const {
    if (k < 1 || k > rank()) throw ParameterError("SvdResult::truncate: k out of range");
    return SvdResult{u.leading(k),
                     std::vector<double>(singular_values.begin(), singular_values.begin() + k),
                     v.leading(k)};
}

SvdResult truncated_svd(const DenseMatrix& a, Index k, double tol, Index max_iter) {
    const Index m = a.rows(), n = a.cols();
    check_rank(k, m, n);
    const Index minmn = std::min(m, n);
    if (minmn <= 500) return finish(dense_direct(a, k));
    if (k <= minmn / 8) {
        DenseOperator op(a);
        return finish(from_lanczos(detail::lanczos_svd(op, k, tol, max_iter), m, n, k));
    }
    RawSvd raw;
    if (dense_gram(a, k, raw)) return finish(std::move(raw));
    return finish(dense_direct(a, k));
}

SvdResult truncated_svd(const SparseMatrix& a, Index k, double tol, Index max_iter) {
    const Index m = a.rows(), n = a.cols();
    check_rank(k, m, n);
    SparseOperator op(a);
    return finish(from_lanczos(detail::lanczos_svd(op, k, tol, max_iter), m, n, k));
}

std::vector<double> singular_values(const DenseMatrix& a) {
    CEMap am(a.data(), a.rows(), a.cols());
    Eigen::VectorXd es;
    if (std::min(a.rows(), a.cols()) <= 64) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(am);
        es = svd.singularValues();
    } else {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(am);
        es = svd.singularValues();
    }
    return std::vector<double>(es.data(), es.data() + es.size());
}

} // namespace cur
