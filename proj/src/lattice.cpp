#include "latproj/lattice.hpp"

#include <cmath>

namespace latproj {

Lattice::Lattice(RationalMatrix gram_matrix, std::optional<RationalMatrix> generator)
    : gram_(std::move(gram_matrix)), gen_(std::move(generator)) {
    if (!gram_.is_square()) throw dimension_error("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw definiteness_error("Gram matrix must be symmetric");
    if (!is_positive_definite(gram_)) throw definiteness_error("Gram matrix must be positive definite");
    if (gen_ && !(gram(*gen_) == gram_))
        throw argument_error("generator does not reproduce the Gram matrix");
}

Lattice Lattice::dual() const {
    RationalMatrix g = inverse(gram_);
    std::optional<RationalMatrix> dg;
    if (gen_) dg = dual_generator(*gen_);
    return Lattice(std::move(g), std::move(dg));
}

Rat Lattice::minimal_norm() const { return shortest_vector(gram_).min_norm2; }

DensityReport Lattice::center_density() const {
    DensityReport r;
    r.min_norm2 = minimal_norm();
    r.min_dist = sqrt_rat(r.min_norm2);
    r.det = determinant();
    Rat rho2 = r.min_norm2 / 4;
    Rat num = 1;
    for (std::size_t i = 0; i < dimension(); ++i) num *= rho2;
    r.center_density_sq = num / r.det;
    r.center_density = sqrt_rat(r.center_density_sq);
    return r;
}

Lattice project_orthogonal(const std::vector<Int>& v) {
    RationalMatrix k = integer_kernel_basis(v);  // validates primitivity
    RationalMatrix g = inverse(gram(k));
    // (KK^t)^{-1} K generates the projection lattice (dual of the cross-section
    // within its span), so a generator is available exactly.
    return Lattice(std::move(g), dual_generator(k));
}

RofV r_of_v(const std::vector<Int>& v) {
    Lattice l = project_orthogonal(v);
    RofV r;
    r.r_sq = l.minimal_norm();
    r.r = sqrt_rat(r.r_sq);
    return r;
}

Lattice zn(std::size_t n) {
    return Lattice(RationalMatrix::identity(n), RationalMatrix::identity(n));
}

}  // namespace latproj
