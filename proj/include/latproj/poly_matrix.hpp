#pragma once

#include <vector>

#include "latproj/int_poly.hpp"
#include "latproj/rational_matrix.hpp"

namespace latproj {

// Matrix over Z[w].
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const IntPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    IntPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    bool operator==(const PolyMatrix& o) const;

    PolyMatrix without_column(std::size_t c) const;

    // entrywise evaluation at an integer point
    RationalMatrix eval(const Int& w) const;

private:
    std::size_t rows_, cols_;
    std::vector<IntPoly> data_;
};

// G*_w = w*Gstar + P for integer n x (n+1) matrices.
PolyMatrix lift_matrix(const RationalMatrix& gstar, const RationalMatrix& p);

// Exact determinant over Z[w] (fraction-free Bareiss elimination).
IntPoly poly_det(const PolyMatrix& m);

// Generalized cross product of the rows of an n x (n+1) matrix:
// component i = (-1)^(n+i) * det(M with column i removed), orthogonal to
// every row at every evaluation point.
std::vector<IntPoly> cross_product(const PolyMatrix& m);

}  // namespace latproj
