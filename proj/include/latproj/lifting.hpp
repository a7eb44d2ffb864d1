#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latproj/poly_matrix.hpp"
#include "latproj/rational_matrix.hpp"

namespace latproj {

/*
 * A lifting G*_w = w*Gstar + P of an integer dual generator, with the derived
 * Gram coefficients A*_w = w^2 A* + w Q1 + Q0.
 */
struct Lifting {
    RationalMatrix gstar;  // n x (n+1), integer
    RationalMatrix p;      // n x (n+1), integer
    RationalMatrix astar;  // Gstar Gstar^t
    RationalMatrix q1;     // Gstar P^t + P Gstar^t
    RationalMatrix q0;     // P P^t
    std::optional<Rat> alpha;  // set when cond2 has been verified

    std::size_t dim() const { return gstar.rows(); }
    bool has_zero_last_column() const;
    PolyMatrix lifted() const { return lift_matrix(gstar, p); }
    RationalMatrix gram_at(const Int& w) const;  // A*_w, exact
};

Lifting make_lifting(const RationalMatrix& gstar, const RationalMatrix& p);

// H_w = last n columns of G*_w.
PolyMatrix h_matrix(const Lifting& l);

struct Cond1Result {
    bool pass = false;
    Int det_value;    // +-1 when pass
    IntPoly det_poly; // always filled
};

// det(H_w) = +-1 for all natural w, decided symbolically: a nonconstant
// integer polynomial cannot take values in {-1,+1} for every natural number.
Cond1Result check_cond1(const Lifting& l);

struct Cond2Result {
    bool pass = false;
    Rat alpha;
};

// Q1 = alpha * A* for a scalar alpha (solved from the first nonzero entry of
// A*, then verified entrywise). alpha need not be an integer.
Cond2Result check_cond2(const Lifting& l);

// Stores the verified alpha on the lifting when cond2 passes.
Lifting with_cond2(Lifting l);

// Cross product of the rows of G*_w, normalized so the first nonzero
// component has a positive leading coefficient. Requires cond1.
std::vector<IntPoly> projection_family(const Lifting& l);

std::vector<IntPoly> normalize_family(std::vector<IntPoly> fam);

std::vector<Int> eval_family(const std::vector<IntPoly>& fam, const Int& w);

// (1/w - alpha/(2 w^2))^2
Rat c_w(const Rat& alpha, const Int& w);

struct ConvergencePoint {
    long w = 0;
    Rat cw;
    Rat error;      // ||A - A_w / c_w||_inf, exact
    double error_f = 0.0;
};

struct ConvergenceReport {
    std::string family_id;
    std::vector<ConvergencePoint> points;
    double slope = 0.0;       // log-log fit over the three largest w
    std::string claimed_order;
};

// Errors of the c_w-scaled duals against the target Gram A. When cond2 holds
// the verified alpha drives c_w; otherwise c_w = 1/w^2.
ConvergenceReport convergence_report(const Lifting& l, const RationalMatrix& a,
                                     const std::vector<long>& ws,
                                     const std::string& family_id = "");

// P2 = U^{-1} P1 reproduces the same projection family on the transported
// basis U^{-1} Gstar.
RationalMatrix transport_perturbation(const RationalMatrix& p1, const RationalMatrix& u);

Lifting transport_lifting(const Lifting& l, const RationalMatrix& u);

struct NeumannResult {
    Rat residual;
    bool below_w0 = false;  // truncation residuals grew: series premise not yet met
    std::vector<Rat> residuals;  // residuals for k = 0..k_max
};

// ||A_w - sum_{k=0}^{k_max} [A/w^2 (-w Q1 - Q0)]^k A/w^2||_inf, exact.
NeumannResult neumann_truncation_check(const Lifting& l, const Int& w, int k_max);

}  // namespace latproj
