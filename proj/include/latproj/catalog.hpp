#pragma once

#include <map>
#include <string>
#include <vector>

#include "latproj/lifting.hpp"

namespace latproj {
namespace catalog {

// D_n (odd n) lifting: dual generator scaled to 2D_n*, perturbation with
// Q1 = 0; det H_w = +1 identically. Rejects even n (no simultaneous solution
// of the two conditions exists for D_4).
Lifting dn_odd_perturbation(int n);

// D_n* lifting for any n >= 1: Q1 = A* (alpha = 1), det H_w = (-1)^(n+1).
Lifting dn_star_perturbation(int n);

struct Rank2Analysis {
    bool feasible = false;
    std::string reason;
    long a = 0, b = 0;
    // feasible case: lifting with parameters (c = alpha/2, k = 1); its family
    // is (1, -w-c, b w^2 + 2bwc + bc^2 + b/... ) -- see make_lifting
    Lifting lifting(long c = 0) const;
};

// Feasibility of the two conditions for the rank-2 lattice aZ + bZ (coprime
// a, b): feasible iff |a| = 1.
Rank2Analysis rank2_analysis(long a, long b);

struct E8Liftings {
    RationalMatrix rep1;      // 2 x (standard E8 generator), integer, lower triangular
    RationalMatrix rep2;      // Construction A of the extended Hamming code H(8,4)
    RationalMatrix baseline;  // [0 | I8]
    RationalMatrix p1, p2;    // published perturbations for rep1 / rep2
    Lifting rep1_baseline() const;
    Lifting rep1_p1() const;
    Lifting rep2_baseline() const;
    Lifting rep2_p2() const;
};

E8Liftings e8_liftings();

// Published best families by dimension (n = 3..8).
std::map<int, std::vector<IntPoly>> table2_families();

struct NamedLattice {
    std::string name;
    int n = 0;
    RationalMatrix gstar;  // square integer dual generator (lower triangular)
    RationalMatrix astar;
    RationalMatrix a;      // inverse(astar)
};

// Integer dual representations usable by the perturbation optimizer.
std::vector<NamedLattice> named_lattices();
NamedLattice named_lattice(const std::string& name);

struct CatalogEntry {
    std::string name;
    std::string target;  // human description of the limit lattice
    Lifting lifting;
};

std::vector<std::string> list_names();
CatalogEntry get(const std::string& name);

}  // namespace catalog
}  // namespace latproj
