#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "latproj/numeric.hpp"

namespace latproj {

/*
 * Dense matrix of arbitrary-precision rationals, row-major, entries kept
 * canonically reduced (mpq invariant). Immutable use is the norm: operations
 * return fresh matrices.
 */
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static RationalMatrix row_vector(const std::vector<Int>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rat& c) const;
    RationalMatrix operator-() const;
    bool operator==(const RationalMatrix& o) const;

    RationalMatrix transpose() const;
    RationalMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_integer() const;
    bool is_symmetric() const;

    Rat inf_norm() const;        // max |entry|
    Rat frobenius_sq() const;    // tr(M M^t), exact
    double frobenius() const;

    std::string to_text() const;  // "rows cols" then row-major exact entries
    static RationalMatrix from_text(const std::string& text);

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

// A = G G^t
RationalMatrix gram(const RationalMatrix& g);

// Exact determinant. Bareiss fraction-free elimination on integer matrices,
// rational Gaussian elimination otherwise; direct expansion below 4x4.
Rat det(const RationalMatrix& m);

// Exact inverse; throws singular_error.
RationalMatrix inverse(const RationalMatrix& m);

// (G G^t)^{-1} G, generator of the dual within span(G); throws rank_error.
RationalMatrix dual_generator(const RationalMatrix& g);

// Integer entries and det = +-1.
bool is_unimodular(const RationalMatrix& m);

// Row-style Hermite normal form of an integer matrix (row space and row
// lattice preserved; pivots positive, entries above each pivot reduced into
// [0, pivot)). Zero rows are dropped.
RationalMatrix hnf_rows(const RationalMatrix& m);

// Basis of Z^{n+1} intersected with v-perp for a primitive vector v, as the
// HNF-normalized rows of an n x (n+1) integer matrix. det(gram(result)) = |v|^2.
RationalMatrix integer_kernel_basis(const std::vector<Int>& v);

bool is_primitive(const std::vector<Int>& v);

}  // namespace latproj
