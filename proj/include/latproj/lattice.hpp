#pragma once

#include <optional>
#include <vector>

#include "latproj/rational_matrix.hpp"
#include "latproj/svp.hpp"

namespace latproj {

struct DensityReport {
    Rat min_norm2;        // exact squared minimal distance
    double min_dist;      // rounded root
    Rat det;              // exact lattice determinant
    Rat center_density_sq;  // exact delta^2 = (min/4)^n / det
    double center_density;
};

/*
 * A lattice given by an exact symmetric positive definite Gram matrix,
 * optionally with a generator whose Gram reproduces it exactly.
 */
class Lattice {
public:
    explicit Lattice(RationalMatrix gram_matrix,
                     std::optional<RationalMatrix> generator = std::nullopt);

    std::size_t dimension() const { return gram_.rows(); }
    const RationalMatrix& gram_matrix() const { return gram_; }
    const std::optional<RationalMatrix>& generator() const { return gen_; }

    Lattice dual() const;
    Rat determinant() const { return det(gram_); }

    // exact squared length of the shortest nonzero vector
    Rat minimal_norm() const;
    DensityReport center_density() const;

private:
    RationalMatrix gram_;
    std::optional<RationalMatrix> gen_;
};

// Projection of Z^{n+1} onto the hyperplane orthogonal to a primitive vector:
// Gram = inverse of the cross-section Gram (projection and cross-section are
// dual to each other). det = 1/|v|^2.
Lattice project_orthogonal(const std::vector<Int>& v);

struct RofV {
    Rat r_sq;   // exact squared shortest distance of the projection lattice
    double r;
};

RofV r_of_v(const std::vector<Int>& v);

Lattice zn(std::size_t n);

}  // namespace latproj
