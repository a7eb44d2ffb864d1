#pragma once

// Test-only brute-force oracles, kept independent of the production
// enumeration path: a plain box scan over a provably sufficient range,
// no tree pruning.

#include <vector>

#include "latproj/rational_matrix.hpp"
#include "latproj/svp.hpp"

namespace latproj::oracle {

// min over 0 != x in a box |x_i| <= B_i of x^t A x, where
// B_i = floor(sqrt(C * (A^-1)_ii)) bounds any vector with norm^2 <= C
// (Cauchy-Schwarz in the A-inner product). C = min diagonal entry.
inline Rat min_norm_box(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    Rat c = a(0, 0);
    for (std::size_t i = 1; i < n; ++i)
        if (a(i, i) < c) c = a(i, i);
    RationalMatrix ainv = inverse(a);
    std::vector<long> bound(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat t = c * ainv(i, i);
        Int b = isqrt(rat_floor(t) + 1);
        while (Rat(b * b) < t) ++b;  // ensure b^2 >= t
        bound[i] = static_cast<long>(b.get_si());
    }
    std::vector<long> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
    Rat best = c;
    for (;;) {
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0) { zero = false; break; }
        if (!zero) {
            Rat q = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (x[j] != 0) q += Rat(x[i]) * a(i, j) * Rat(x[j]);
            }
            if (q < best) best = q;
        }
        std::size_t k = 0;
        while (k < n && ++x[k] > bound[k]) x[k++] = -bound[k];
        if (k == n) break;
    }
    return best;
}

// same box scan, but run on the LLL-reduced Gram so the box stays small;
// reduction changes the basis, not the minimum
inline Rat min_norm_reduced_box(const RationalMatrix& a) {
    RationalMatrix u = lll_transform(a);
    return min_norm_box(u * a * u.transpose());
}

}  // namespace latproj::oracle
