#include "latproj/rational_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace latproj {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_error("ragged initializer");
        for (const auto& x : r) data_.push_back(x);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw dimension_error("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::row_vector(const std::vector<Int>& v) {
    RationalMatrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = Rat(v[j]);
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("shape mismatch in +");
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw dimension_error("shape mismatch in -");
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("shape mismatch in *");
    RationalMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rat& c) const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

RationalMatrix RationalMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                                         std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw dimension_error("submatrix out of range");
    RationalMatrix r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

bool RationalMatrix::is_integer() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rat& q) { return latproj::is_integer(q); });
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Rat RationalMatrix::inf_norm() const {
    Rat m = 0;
    for (const auto& q : data_) {
        Rat a = abs(q);
        if (a > m) m = a;
    }
    return m;
}

Rat RationalMatrix::frobenius_sq() const {
    Rat s = 0;
    for (const auto& q : data_) s += q * q;
    return s;
}

double RationalMatrix::frobenius() const { return sqrt_rat(frobenius_sq()); }

std::string RationalMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << rat_str((*this)(i, j));
        }
        os << '\n';
    }
    return os.str();
}

RationalMatrix RationalMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    long r = -1, c = -1;
    if (!(is >> r >> c) || r < 0 || c < 0) throw parse_error("matrix header must be 'rows cols'");
    RationalMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    std::string tok;
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) {
            if (!(is >> tok)) throw parse_error("matrix text truncated");
            m(i, j) = parse_rat(tok);
        }
    return m;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    return os << m.to_text();
}

RationalMatrix gram(const RationalMatrix& g) { return g * g.transpose(); }

namespace {

Rat det_small(const RationalMatrix& m) {
    switch (m.rows()) {
        case 0: return 1;
        case 1: return m(0, 0);
        case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        default:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
}

// Bareiss: all intermediates stay integral, final pivot is the determinant.
Rat det_bareiss_int(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rat(sign * a[n - 1][n - 1]);
}

Rat det_gauss_rat(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    Rat d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            d = -d;
        }
        d *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

}  // namespace

Rat det(const RationalMatrix& m) {
    if (!m.is_square()) throw dimension_error("det of non-square matrix");
    if (m.rows() <= 3) return det_small(m);
    if (m.is_integer()) return det_bareiss_int(m);
    return det_gauss_rat(m);
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.is_square()) throw dimension_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw singular_error("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RationalMatrix dual_generator(const RationalMatrix& g) {
    RationalMatrix a = gram(g);
    if (det(a) == 0) throw rank_error("rank-deficient generator");
    return inverse(a) * g;
}

bool is_unimodular(const RationalMatrix& m) {
    if (!m.is_square()) throw dimension_error("unimodularity of non-square matrix");
    if (!m.is_integer()) return false;
    Rat d = det(m);
    return d == 1 || d == -1;
}

RationalMatrix hnf_rows(const RationalMatrix& m) {
    if (!m.is_integer()) throw argument_error("HNF needs integer entries");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Int>> a(rows, std::vector<Int>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num();

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd the column below r into row r
        for (std::size_t i = r + 1; i < rows; ++i) {
            while (a[i][c] != 0) {
                if (a[r][c] == 0) {
                    std::swap(a[r], a[i]);
                    continue;
                }
                Int q = floor_div(a[i][c], a[r][c]);
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) std::swap(a[r], a[i]);
            }
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0)
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(a[i][c], a[r][c]);
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        }
        ++r;
    }
    RationalMatrix h(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) h(i, j) = Rat(a[i][j]);
    return h;
}

bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g == 1;
}

RationalMatrix integer_kernel_basis(const std::vector<Int>& v) {
    const std::size_t m = v.size();
    if (m < 2) throw argument_error("vector too short");
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    if (all_zero) throw argument_error("zero vector");
    if (!is_primitive(v)) throw primitivity_error("vector is not primitive");

    // Column operations reducing v to (+-1, 0, ..., 0); the same operations
    // applied to I leave the kernel of v in columns 2..m.
    std::vector<Int> w = v;
    std::vector<std::vector<Int>> u(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
    auto colsub = [&](std::size_t dst, std::size_t src, const Int& q) {
        w[dst] -= q * w[src];
        for (std::size_t i = 0; i < m; ++i) u[i][dst] -= q * u[i][src];
    };
    auto colswap = [&](std::size_t a_, std::size_t b_) {
        std::swap(w[a_], w[b_]);
        for (std::size_t i = 0; i < m; ++i) std::swap(u[i][a_], u[i][b_]);
    };
    for (std::size_t j = 1; j < m; ++j) {
        while (w[j] != 0) {
            if (w[0] == 0) {
                colswap(0, j);
                continue;
            }
            Int q = floor_div(w[j], w[0]);
            colsub(j, 0, q);
            if (w[j] != 0) colswap(0, j);
        }
    }
    RationalMatrix k(m - 1, m);
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) k(j - 1, i) = Rat(u[i][j]);
    RationalMatrix h = hnf_rows(k);
    if (h.rows() != m - 1) throw error("kernel basis has wrong rank");
    return h;
}

}  // namespace latproj
