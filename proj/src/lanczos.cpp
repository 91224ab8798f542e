#include "lanczos_impl.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "cur/errors.hpp"

namespace cur::detail {

namespace {

constexpr std::uint64_t kStartSeed = 0x6a09e667f3bcc908ull;

void fill_gaussian(std::mt19937_64& gen, double* x, Index n) {
    // Box-Muller on the raw 53-bit stream; independent of libstdc++'s
    // distribution internals.
    Index i = 0;
    while (i < n) {
        const double u1 = (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        x[i++] = r * std::cos(2.0 * M_PI * u2);
        if (i < n) x[i++] = r * std::sin(2.0 * M_PI * u2);
    }
}

double reorthogonalize(const std::vector<double>& basis, Index dim, Index count, double* w) {
    // two passes of classical Gram-Schmidt against the stored columns
    for (int pass = 0; pass < 2; ++pass) {
        for (Index j = 0; j < count; ++j) {
            const double* q = basis.data() + j * dim;
            double dot = 0.0;
            for (Index i = 0; i < dim; ++i) dot += q[i] * w[i];
            for (Index i = 0; i < dim; ++i) w[i] -= dot * q[i];
        }
    }
    double nrm = 0.0;
    for (Index i = 0; i < dim; ++i) nrm += w[i] * w[i];
    return std::sqrt(nrm);
}

// Deterministic replacement direction orthogonal to the captured basis.
bool fresh_direction(std::mt19937_64& gen, const std::vector<double>& basis, Index dim,
                     Index count, double* w) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        fill_gaussian(gen, w, dim);
        double nrm = 0.0;
        for (Index i = 0; i < dim; ++i) nrm += w[i] * w[i];
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) continue;
        for (Index i = 0; i < dim; ++i) w[i] /= nrm;
        const double res = reorthogonalize(basis, dim, count, w);
        if (res > 1e-4) {
            for (Index i = 0; i < dim; ++i) w[i] /= res;
            return true;
        }
    }
    return false;
}

} // namespace

LanczosSvd lanczos_svd(const LinearOperator& a, Index k, double tol, Index max_iter) {
    const Index m = a.rows(), n = a.cols();
    const Index minmn = std::min(m, n);
    if (k < 1 || k > minmn) throw ParameterError("lanczos_svd: rank out of range");
    const Index cap = max_iter > 0 ? std::min(max_iter, minmn)
                                   : std::min(minmn, std::max<Index>(6 * k + 80, 100));

    std::mt19937_64 gen(kStartSeed);
    std::vector<double> ubasis(static_cast<std::size_t>(m) * static_cast<std::size_t>(cap));
    std::vector<double> vbasis(static_cast<std::size_t>(n) * static_cast<std::size_t>(cap + 1));
    std::vector<double> alpha, beta; // beta[i] couples step i to i+1
    alpha.reserve(static_cast<std::size_t>(cap));
    beta.reserve(static_cast<std::size_t>(cap));

    // starting vector
    {
        double* v0 = vbasis.data();
        fill_gaussian(gen, v0, n);
        double nrm = 0.0;
        for (Index i = 0; i < n; ++i) nrm += v0[i] * v0[i];
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw ConvergenceError("lanczos_svd: degenerate start vector");
        for (Index i = 0; i < n; ++i) v0[i] /= nrm;
    }

    std::vector<double> work(static_cast<std::size_t>(std::max(m, n)));
    double scale = 0.0;        // running largest alpha/beta, the operator-scale probe
    bool exhausted_v = false;  // no fresh direction remains on the V side
    Index p = 0;
    double beta_prev = 0.0;

    Eigen::BDCSVD<Eigen::MatrixXd> small_svd;
    Eigen::JacobiSVD<Eigen::MatrixXd> small_svd_j;
    Eigen::MatrixXd bu, bv;
    Eigen::VectorXd bs;

    auto run_small_svd = [&](Index pp) {
        Eigen::MatrixXd b = Eigen::MatrixXd::Zero(pp, pp);
        for (Index i = 0; i < pp; ++i) {
            b(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < pp) b(i, i + 1) = beta[static_cast<std::size_t>(i)];
        }
        if (pp > 64) {
            small_svd.compute(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
            bu = small_svd.matrixU();
            bv = small_svd.matrixV();
            bs = small_svd.singularValues();
        } else {
            small_svd_j.compute(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
            bu = small_svd_j.matrixU();
            bv = small_svd_j.matrixV();
            bs = small_svd_j.singularValues();
        }
    };

    bool exact = false;
    while (p < cap) {
        const double* vp = vbasis.data() + p * n;
        double* up = ubasis.data() + p * m;
        a.apply(vp, up);
        if (beta_prev != 0.0) {
            const double* uprev = ubasis.data() + (p - 1) * m;
            for (Index i = 0; i < m; ++i) up[i] -= beta_prev * uprev[i];
        }
        double al = reorthogonalize(ubasis, m, p, up);
        if (scale == 0.0) scale = al;
        if (al <= 1e-14 * std::max(scale, 1e-300)) {
            // u-direction exhausted; restart the left side deterministically
            al = 0.0;
            if (!fresh_direction(gen, ubasis, m, p, up)) {
                exact = true; // the whole left space is captured
                break;
            }
        } else {
            for (Index i = 0; i < m; ++i) up[i] /= al;
        }
        alpha.push_back(al);
        scale = std::max(scale, al);

        double* w = work.data();
        a.apply_transpose(up, w);
        for (Index i = 0; i < n; ++i) w[i] -= al * vp[i];
        double be = reorthogonalize(vbasis, n, p + 1, w);
        ++p;
        if (be <= 1e-14 * std::max(scale, 1e-300)) {
            be = 0.0;
            if (p < cap && !fresh_direction(gen, vbasis, n, p, w)) {
                exhausted_v = true;
            }
        }
        scale = std::max(scale, be);
        beta.push_back(be);
        beta_prev = be;
        if (p < cap && !exhausted_v) {
            double* vnext = vbasis.data() + p * n;
            if (be == 0.0) {
                std::copy(w, w + n, vnext); // fresh unit direction from above
                beta_prev = 0.0;
            } else {
                for (Index i = 0; i < n; ++i) vnext[i] = w[i] / be;
            }
        }

        if (exhausted_v || p == cap || p == minmn || p % 8 == 0) {
            if (p < k) {
                if (exhausted_v) { exact = true; break; }
                continue;
            }
            run_small_svd(p);
            const double s1 = bs(0);
            const double last_beta = beta.back();
            bool ok = true;
            for (Index j = 0; j < k; ++j) {
                const double res = std::abs(last_beta * bv(p - 1, j));
                if (res > tol * std::max(s1, 1e-300)) { ok = false; break; }
            }
            if (ok || p == minmn || exhausted_v) {
                exact = true;
                break;
            }
        }
    }

    if (!exact) {
        if (p < k)
            throw ConvergenceError("lanczos_svd: subspace collapsed before reaching rank " +
                                   std::to_string(k));
        run_small_svd(p);
        const double s1 = bs(0);
        const double last_beta = beta.back();
        for (Index j = 0; j < k; ++j) {
            const double res = std::abs(last_beta * bv(p - 1, j));
            if (res > tol * std::max(s1, 1e-300))
                throw ConvergenceError("lanczos_svd: not converged within iteration cap " +
                                       std::to_string(cap));
        }
    } else if (p >= 1) {
        run_small_svd(p);
    }

    if (p < 1) throw ConvergenceError("lanczos_svd: empty subspace");

    LanczosSvd out;
    const Index have = std::min<Index>(p, k);
    out.sigma.assign(static_cast<std::size_t>(k), 0.0);
    out.u.assign(static_cast<std::size_t>(m) * k, 0.0);
    out.v.assign(static_cast<std::size_t>(n) * k, 0.0);
    for (Index j = 0; j < have; ++j) {
        out.sigma[static_cast<std::size_t>(j)] = bs(j);
        double* uc = out.u.data() + j * m;
        double* vc = out.v.data() + j * n;
        for (Index l = 0; l < p; ++l) {
            const double cu = bu(l, j);
            const double cv = bv(l, j);
            const double* ub = ubasis.data() + l * m;
            const double* vb = vbasis.data() + l * n;
            if (cu != 0.0)
                for (Index i = 0; i < m; ++i) uc[i] += cu * ub[i];
            if (cv != 0.0)
                for (Index i = 0; i < n; ++i) vc[i] += cv * vb[i];
        }
    }
    // rank-deficient tail: orthonormal completions with sigma = 0, kept
    // orthogonal to the captured Krylov bases and to each other
    auto complete = [&](std::vector<double>& basis, Index dim, std::vector<double>& cols,
                        Index col_count, Index j, std::mt19937_64& cgen) -> bool {
        double* target = cols.data() + j * dim;
        for (int attempt = 0; attempt < 8; ++attempt) {
            fill_gaussian(cgen, target, dim);
            double res = reorthogonalize(basis, dim, col_count, target);
            if (res <= 1e-8) continue;
            for (Index i = 0; i < dim; ++i) target[i] /= res;
            // previously completed columns
            bool ok = true;
            for (int pass = 0; pass < 2 && ok; ++pass) {
                for (Index l = have; l < j; ++l) {
                    const double* q = cols.data() + l * dim;
                    double dot = 0.0;
                    for (Index i = 0; i < dim; ++i) dot += q[i] * target[i];
                    for (Index i = 0; i < dim; ++i) target[i] -= dot * q[i];
                }
                double nrm = 0.0;
                for (Index i = 0; i < dim; ++i) nrm += target[i] * target[i];
                nrm = std::sqrt(nrm);
                if (nrm <= 1e-8) { ok = false; break; }
                for (Index i = 0; i < dim; ++i) target[i] /= nrm;
            }
            if (ok) return true;
        }
        return false;
    };
    for (Index j = have; j < k; ++j) {
        std::mt19937_64 cgen(kStartSeed ^ (0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(j)));
        if (!complete(ubasis, m, out.u, p, j, cgen))
            throw ConvergenceError("lanczos_svd: could not complete left basis");
        if (!complete(vbasis, n, out.v, p, j, cgen))
            throw ConvergenceError("lanczos_svd: could not complete right basis");
    }
    return out;
}

} // namespace cur::detail
