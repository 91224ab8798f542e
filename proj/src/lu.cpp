#include "cur/lu.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace cur {

IndexVector lu_pivot_indices(const DenseMatrix& a) {
    const Index m = a.rows(), k = a.cols();
    if (m < k) throw ParameterError("lu_pivot_indices: matrix must be square or tall");

    DenseMatrix work = a;
    // perm[0..m): current row order; rows before `step` are pivotal
    std::vector<Index> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), Index{0});
    std::vector<Index> pivots;
    pivots.reserve(static_cast<std::size_t>(k));

    for (Index step = 0; step < k; ++step) {
        Index best = step;
        double best_val = std::abs(work(perm[step], step));
        for (Index i = step + 1; i < m; ++i) {
            double v = std::abs(work(perm[i], step));
            if (v > best_val) {
                best_val = v;
                best = i;
            }
        }
        if (best_val == 0.0)
            throw DegeneratePivotError("lu_pivot_indices: no nonzero pivot in column " +
                                       std::to_string(step + 1));
        // Possible tie between candidate rows: the scan above keeps the first
        // (smallest original position); swapping preserves relative order of
        // the untouched tail only up to this one exchange, so resolve ties on
        // the ORIGINAL row number instead.
        for (Index i = step; i < m; ++i) {
            if (std::abs(work(perm[i], step)) == best_val && perm[i] < perm[best]) best = i;
        }
        std::swap(perm[step], perm[best]);
        const Index prow = perm[step];
        pivots.push_back(prow + 1);
        const double pval = work(prow, step);
        for (Index i = step + 1; i < m; ++i) {
            const Index r = perm[i];
            const double f = work(r, step) / pval;
            if (f == 0.0) continue;
            for (Index j = step + 1; j < k; ++j) work(r, j) -= f * work(prow, j);
        }
    }
    return IndexVector(std::move(pivots), m);
}

} // namespace cur
