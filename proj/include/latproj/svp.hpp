#pragma once

#include <optional>
#include <vector>

#include "latproj/rational_matrix.hpp"

namespace latproj {

// Exact LDL^t of a symmetric matrix: A = L D L^t with unit lower L.
// Empty result when a pivot is <= 0 (not positive definite).
struct Ldlt {
    RationalMatrix l;
    std::vector<Rat> d;
};
std::optional<Ldlt> ldlt(const RationalMatrix& a);

bool is_positive_definite(const RationalMatrix& a);

// LLL (delta = 0.99) run in floating point on a Cholesky factor of the exact
// Gram matrix; returns the integer transform U. The reduced Gram U A U^t is
// recomputed exactly by callers, so float error only affects basis quality,
// never correctness.
RationalMatrix lll_transform(const RationalMatrix& gram, double delta = 0.99);

struct SvpResult {
    Rat min_norm2;           // min over x != 0 of x^t A x, exact
    std::vector<Int> coeffs; // witness in the original coordinates
};

// Exact shortest vector of a positive definite rational Gram matrix:
// float LLL for a good basis, then Schnorr-Euchner enumeration with all
// pruning decisions taken in exact rational arithmetic.
SvpResult shortest_vector(const RationalMatrix& gram);

}  // namespace latproj
