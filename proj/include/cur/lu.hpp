#ifndef CUR_LU_HPP
#define CUR_LU_HPP

#include "cur/dense_matrix.hpp"
#include "cur/index_vector.hpp"

namespace cur {

// Row indices chosen, in pivot order, by LU with partial pivoting on an
// m x k matrix (m >= k). Ties go to the smallest row index. Throws
// DegeneratePivotError when a pivot column has no nonzero candidate.
IndexVector lu_pivot_indices(const DenseMatrix& a);

} // namespace cur

#endif
