#include "latproj/poly_matrix.hpp"

namespace latproj {

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyMatrix PolyMatrix::without_column(std::size_t c) const {
    if (c >= cols_) throw dimension_error("column index out of range");
    PolyMatrix r(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t jj = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == c) continue;
            r(i, jj++) = (*this)(i, j);
        }
    }
    return r;
}

RationalMatrix PolyMatrix::eval(const Int& w) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = Rat((*this)(i, j).eval(w));
    return r;
}

PolyMatrix lift_matrix(const RationalMatrix& gstar, const RationalMatrix& p) {
    if (gstar.rows() != p.rows() || gstar.cols() != p.cols())
        throw dimension_error("Gstar and P shapes differ");
    if (gstar.cols() != gstar.rows() + 1)
        throw dimension_error("lift matrix must be n x (n+1)");
    if (!gstar.is_integer() || !p.is_integer())
        throw argument_error("lift matrix needs integer Gstar and P");
    PolyMatrix m(gstar.rows(), gstar.cols());
    for (std::size_t i = 0; i < gstar.rows(); ++i)
        for (std::size_t j = 0; j < gstar.cols(); ++j)
            m(i, j) = IntPoly::monomial(1, gstar(i, j).get_num()) + IntPoly(p(i, j).get_num());
    return m;
}

IntPoly poly_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("poly_det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return IntPoly(1);
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);

    // Bareiss over Z[w]; divisions are exact in an integral domain.
    std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    IntPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return IntPoly();
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev);
            a[i][k] = IntPoly();
        }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

std::vector<IntPoly> cross_product(const PolyMatrix& m) {
    if (m.cols() != m.rows() + 1) throw dimension_error("cross product needs n x (n+1)");
    const std::size_t n = m.rows();
    std::vector<IntPoly> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        IntPoly d = poly_det(m.without_column(i));
        // (-1)^(n+i) with i 1-based
        out[i] = ((n + i + 1) % 2 == 0) ? d : -d;
    }
    return out;
}

}  // namespace latproj
