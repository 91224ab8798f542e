#include "cur/least_squares.hpp"

#include "cur/qr.hpp"

namespace cur {

DenseMatrix least_squares_solve(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows())
        throw ParameterError("least_squares_solve: a and b must have the same row count");
    return HouseholderQr(a).solve(b);
}

} // namespace cur
