#include "cur/qr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace cur {

namespace {

// Reflector application: v holds the Householder vector below its implied
// leading 1; w[0..len) is the column window being updated.
void apply_householder(const double* v, double beta, double* w, Index len) {
    if (beta == 0.0) return;
    double dot = w[0];
    for (Index i = 1; i < len; ++i) dot += v[i] * w[i];
    dot *= beta;
    w[0] -= dot;
    for (Index i = 1; i < len; ++i) w[i] -= dot * v[i];
}

// Turn the column window into a stored reflector (scaled vector below the
// diagonal, alpha on it) and return beta; no-op on a zero window.
double make_reflector(double* col, Index len) {
    double sigma = 0.0;
    for (Index i = 1; i < len; ++i) sigma += col[i] * col[i];
    const double norm = std::sqrt(col[0] * col[0] + sigma);
    if (norm == 0.0) return 0.0;
    const double alpha = col[0] >= 0.0 ? -norm : norm;
    const double v0 = col[0] - alpha;
    for (Index i = 1; i < len; ++i) col[i] /= v0;
    col[0] = alpha;
    return 2.0 * v0 * v0 / (sigma + v0 * v0);
}

} // namespace

PivotedQr pivoted_qr(const DenseMatrix& a) {
    const Index m = a.rows(), n = a.cols();
    const Index r = std::min(m, n);
    DenseMatrix w = a;
    std::vector<double> beta(static_cast<std::size_t>(r), 0.0);
    std::vector<Index> piv(static_cast<std::size_t>(n));
    std::iota(piv.begin(), piv.end(), Index{1});

    // residual column norms, downdated per step with a recompute guard
    std::vector<double> norms2(static_cast<std::size_t>(n)), ref_norms2(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) {
        double s = 0.0;
        for (Index i = 0; i < m; ++i) s += w(i, j) * w(i, j);
        norms2[static_cast<std::size_t>(j)] = ref_norms2[static_cast<std::size_t>(j)] = s;
    }

    for (Index step = 0; step < r; ++step) {
        Index best = step;
        for (Index j = step + 1; j < n; ++j) {
            const double nj = norms2[static_cast<std::size_t>(j)];
            const double nb = norms2[static_cast<std::size_t>(best)];
            if (nj > nb ||
                (nj == nb && piv[static_cast<std::size_t>(j)] < piv[static_cast<std::size_t>(best)]))
                best = j;
        }
        if (best != step) {
            for (Index i = 0; i < m; ++i) std::swap(w(i, step), w(i, best));
            std::swap(piv[static_cast<std::size_t>(step)], piv[static_cast<std::size_t>(best)]);
            std::swap(norms2[static_cast<std::size_t>(step)], norms2[static_cast<std::size_t>(best)]);
            std::swap(ref_norms2[static_cast<std::size_t>(step)],
                      ref_norms2[static_cast<std::size_t>(best)]);
        }

        double* col = w.col(step) + step;
        const Index len = m - step;
        const double b = make_reflector(col, len);
        beta[static_cast<std::size_t>(step)] = b;
        for (Index j = step + 1; j < n; ++j)
            apply_householder(col, b, w.col(j) + step, len);

        for (Index j = step + 1; j < n; ++j) {
            auto& n2 = norms2[static_cast<std::size_t>(j)];
            const double t = w(step, j);
            n2 -= t * t;
            if (n2 < 0.0) n2 = 0.0;
            if (n2 <= 1e-12 * ref_norms2[static_cast<std::size_t>(j)]) {
                double s = 0.0;
                for (Index i = step + 1; i < m; ++i) s += w(i, j) * w(i, j);
                n2 = s;
                ref_norms2[static_cast<std::size_t>(j)] = s;
            }
        }
    }

    // thin Q: reflectors applied to the leading identity columns
    DenseMatrix q(m, r);
    std::vector<double> e(static_cast<std::size_t>(m));
    for (Index j = 0; j < r; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        for (Index s = r - 1; s >= 0; --s)
            apply_householder(w.col(s) + s, beta[static_cast<std::size_t>(s)], e.data() + s, m - s);
        for (Index i = 0; i < m; ++i) q(i, j) = e[static_cast<std::size_t>(i)];
    }

    DenseMatrix t(r, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i <= std::min(j, r - 1); ++i) t(i, j) = w(i, j);

    return PivotedQr{std::move(q), std::move(t), IndexVector(std::move(piv), n)};
}

HouseholderQr::HouseholderQr(const DenseMatrix& a) : factors_(a) {
    const Index m = a.rows(), n = a.cols();
    if (m < n) throw ParameterError("HouseholderQr: matrix must not have more columns than rows");
    tau_.assign(static_cast<std::size_t>(n), 0.0);
    for (Index step = 0; step < n; ++step) {
        double* col = factors_.col(step) + step;
        const Index len = m - step;
        const double b = make_reflector(col, len);
        tau_[static_cast<std::size_t>(step)] = b;
        for (Index j = step + 1; j < n; ++j)
            apply_householder(col, b, factors_.col(j) + step, len);
    }
}

void HouseholderQr::apply_qt(DenseMatrix& b) const {
    const Index m = rows(), n = cols();
    if (b.rows() != m) throw ParameterError("apply_qt: row count mismatch");
    for (Index j = 0; j < b.cols(); ++j)
        for (Index s = 0; s < n; ++s)
            apply_householder(factors_.col(s) + s, tau_[static_cast<std::size_t>(s)],
                              b.col(j) + s, m - s);
}

DenseMatrix HouseholderQr::upper_solve(const DenseMatrix& qtb) const {
    const Index n = cols();
    const double dmax = diag_max_abs();
    const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(rows()) * dmax;
    DenseMatrix x(n, qtb.cols());
    for (Index j = 0; j < qtb.cols(); ++j) {
        for (Index i = n - 1; i >= 0; --i) {
            const double d = factors_(i, i);
            if (std::abs(d) <= tol)
                throw SingularityError("least-squares solve: pivot " + std::to_string(i + 1) +
                                       " magnitude " + std::to_string(std::abs(d)) +
                                       " below rank tolerance");
            double s = qtb(i, j);
            for (Index l = i + 1; l < n; ++l) s -= factors_(i, l) * x(l, j);
            x(i, j) = s / d;
        }
    }
    return x;
}

DenseMatrix HouseholderQr::solve(const DenseMatrix& b) const {
    DenseMatrix qtb = b;
    apply_qt(qtb);
    return upper_solve(qtb);
}

double HouseholderQr::diag_min_abs() const {
    double v = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < cols(); ++i) v = std::min(v, std::abs(factors_(i, i)));
    return v;
}

double HouseholderQr::diag_max_abs() const {
    double v = 0.0;
    for (Index i = 0; i < cols(); ++i) v = std::max(v, std::abs(factors_(i, i)));
    return v;
}

DenseMatrix HouseholderQr::thin_q() const {
    const Index m = rows(), n = cols();
    DenseMatrix q(m, n);
    std::vector<double> e(static_cast<std::size_t>(m));
    for (Index j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[static_cast<std::size_t>(j)] = 1.0;
        for (Index s = n - 1; s >= 0; --s)
            apply_householder(factors_.col(s) + s, tau_[static_cast<std::size_t>(s)],
                              e.data() + s, m - s);
        for (Index i = 0; i < m; ++i) q(i, j) = e[static_cast<std::size_t>(i)];
    }
    return q;
}

} // namespace cur
