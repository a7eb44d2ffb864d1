#include "latproj/catalog.hpp"

#include <algorithm>

namespace latproj {
namespace catalog {

namespace {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

RationalMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
    return RationalMatrix::from_rows(rows);
}

}  // namespace

Lifting dn_odd_perturbation(int n) {
    if (n < 3 || n % 2 == 0)
        throw argument_error(
            "odd n >= 3 required: the two conditions have no simultaneous solution for D_4 "
            "and this construction covers odd dimensions only");
    const std::size_t nn = static_cast<std::size_t>(n);
    RationalMatrix gstar(nn, nn + 1);
    for (std::size_t i = 0; i + 1 < nn; ++i) gstar(i, i) = -2;
    for (std::size_t j = 0; j < nn; ++j) gstar(nn - 1, j) = -1;

    RationalMatrix p(nn, nn + 1);
    for (long i = 1; i <= n; ++i) {
        long j = n - i;
        if (j >= 1) p(i - 1, j - 1) = (i % 2 == 1) ? 1 : -1;  // (-1)^(i+1)
        j = n - i + 2;
        if (i >= 2 && i <= n - 1) p(i - 1, j - 1) = (i % 2 == 0) ? 1 : -1;  // (-1)^i
    }
    p(0, nn - 1) = -1;
    p(nn - 2, nn) = 1;
    p(nn - 1, nn) = 1;
    return make_lifting(gstar, p);
}

Lifting dn_star_perturbation(int n) {
    if (n < 1) throw argument_error("n >= 1 required");
    const std::size_t nn = static_cast<std::size_t>(n);
    if (n == 1) {
        RationalMatrix gs(1, 2), p(1, 2);
        gs(0, 0) = -2;
        p(0, 0) = -1;
        p(0, 1) = 1;
        return make_lifting(gs, p);
    }
    RationalMatrix gstar(nn, nn + 1);
    gstar(0, 0) = 2;
    for (std::size_t i = 1; i < nn; ++i) {
        gstar(i, i - 1) = 1;
        gstar(i, i) = -1;
    }
    RationalMatrix p(nn, nn + 1);
    p(0, 0) = 1;
    for (std::size_t j = 1; j < nn; ++j) p(0, j) = -1;
    for (std::size_t i = 1; i < nn; ++i) p(i, i) = -1;
    for (long i = 2; i <= n; ++i) {
        Int b = binomial(n - 1, i - 2);
        p(i - 1, nn) = Rat((i % 2 == 0) ? b : -b);
    }
    return make_lifting(gstar, p);
}

Lifting Rank2Analysis::lifting(long c) const {
    if (!feasible) throw construction_error("infeasible rank-2 case: " + reason);
    RationalMatrix gs(2, 3), p(2, 3);
    gs(0, 0) = a;
    gs(1, 1) = b;
    p(0, 0) = a * c;
    p(0, 1) = a;
    p(1, 0) = -b;
    p(1, 1) = b * c;
    p(1, 2) = a;
    return make_lifting(gs, p);
}

Rank2Analysis rank2_analysis(long a, long b) {
    Rank2Analysis r;
    r.a = a;
    r.b = b;
    if (a == 0 || b == 0) throw argument_error("a and b must be nonzero");
    if (gcd(Int(a), Int(b)) != 1) throw argument_error("a and b must be coprime");
    if (a == 1 || a == -1) {
        r.feasible = true;
        r.reason = "alpha = 2c, P12 = a, P21 = -b, P23 = a satisfies both conditions";
    } else {
        r.feasible = false;
        r.reason =
            "condition on Q1 forces P11 = a*alpha/2, P21 = -b*P12/a with alpha even and "
            "P12 = k*a; det(H_w) = a*k*P23 - b*(alpha/2 + w)*P13 is then constant only if "
            "P13 = 0, and a*k*P23 = +-1 is impossible for |a| > 1";
    }
    return r;
}

E8Liftings e8_liftings() {
    E8Liftings e;
    e.rep1 = int_matrix({{4, 0, 0, 0, 0, 0, 0, 0},
                         {-2, 2, 0, 0, 0, 0, 0, 0},
                         {0, -2, 2, 0, 0, 0, 0, 0},
                         {0, 0, -2, 2, 0, 0, 0, 0},
                         {0, 0, 0, -2, 2, 0, 0, 0},
                         {0, 0, 0, 0, -2, 2, 0, 0},
                         {0, 0, 0, 0, 0, -2, 2, 0},
                         {1, 1, 1, 1, 1, 1, 1, 1}});
    e.rep2 = int_matrix({{2, 0, 0, 0, 0, 0, 0, 0},
                         {0, 2, 0, 0, 0, 0, 0, 0},
                         {0, 0, 2, 0, 0, 0, 0, 0},
                         {0, 0, 0, 2, 0, 0, 0, 0},
                         {1, 1, 1, 0, 1, 0, 0, 0},
                         {0, 1, 1, 1, 0, 1, 0, 0},
                         {0, 0, 1, 1, 1, 0, 1, 0},
                         {0, 1, 0, 1, 1, 0, 0, 1}});
    RationalMatrix bl(8, 9);
    for (std::size_t i = 0; i < 8; ++i) bl(i, i + 1) = 1;
    e.baseline = bl;
    e.p1 = int_matrix({{0, 1, 0, 0, 0, 0, 0, 0, 0},
                       {0, -1, 1, 0, 0, 0, 0, 0, 0},
                       {0, -1, -1, 1, 0, 0, 0, 0, 0},
                       {0, 1, -1, -1, 1, 0, 0, 0, 0},
                       {0, 0, 1, -1, -1, 1, 0, 0, 0},
                       {0, 0, 0, 1, -1, -1, 1, 0, 0},
                       {0, 0, 0, 0, 1, -1, -1, 1, 0},
                       {0, 0, 0, 0, 0, 0, 0, 0, 1}});
    e.p2 = int_matrix({{0, 1, 0, 0, 0, 0, 0, 0, 0},
                       {0, 0, 1, 0, 0, 0, 0, 0, 0},
                       {0, 0, 0, 1, 0, 0, 0, 0, 0},
                       {0, -1, 0, 1, 1, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0, 1, 0, 0, 0},
                       {0, 0, 1, 1, 0, 0, 1, 0, 0},
                       {0, 0, -1, 1, 0, 0, 0, 1, 0},
                       {0, 0, 0, 0, 1, 1, -1, 0, 1}});
    return e;
}

namespace {

RationalMatrix with_zero_column(const RationalMatrix& g) {
    RationalMatrix r(g.rows(), g.cols() + 1);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) r(i, j) = g(i, j);
    return r;
}

}  // namespace

Lifting E8Liftings::rep1_baseline() const { return make_lifting(with_zero_column(rep1), baseline); }
Lifting E8Liftings::rep1_p1() const { return make_lifting(with_zero_column(rep1), p1); }
Lifting E8Liftings::rep2_baseline() const { return make_lifting(with_zero_column(rep2), baseline); }
Lifting E8Liftings::rep2_p2() const { return make_lifting(with_zero_column(rep2), p2); }

std::map<int, std::vector<IntPoly>> table2_families() {
    auto poly = [](std::vector<long> asc) {
        std::vector<Int> c(asc.size());
        for (std::size_t i = 0; i < asc.size(); ++i) c[i] = asc[i];
        return IntPoly(std::move(c));
    };
    std::map<int, std::vector<IntPoly>> t;
    t[3] = {poly({1}), poly({1, 1, 2}), poly({1, -1, 2}), poly({0, -3, 0, -4})};
    t[4] = {poly({1}), poly({-1, 2}), poly({1, -2, 4}), poly({1, 0, -4, 8}),
            poly({0, 0, 4, -8, 8})};
    t[5] = {poly({1}),
            poly({1, 3, 2, 4}),
            poly({1, -3, 2, -4}),
            poly({1, 1, 8, 0, 8}),
            poly({1, -1, 8, 0, 8}),
            poly({0, 5, 0, 20, 0, 16})};
    t[6] = {poly({1}),
            poly({-1, 2}),
            poly({1, -2, 4}),
            poly({1, 0, -4, 8}),
            poly({1, 0, 4, -8, 16}),
            poly({-1, 2, 4, 0, -16, 32}),
            poly({1, -2, 2, 0, 16, -32, 32})};
    t[7] = {poly({1}),
            poly({1, -2}),
            poly({2, -4, 4}),
            poly({3, -10, 12, -8}),
            poly({2, -10, 18, -16, 8}),
            poly({4, -16, 28, -30, 16, -8}),
            poly({3, -16, 36, -44, 38, -16, 8}),
            poly({5, -24, 50, -70, 60, -46, 16, -8})};
    t[8] = {poly({1}),
            poly({0, -2}),
            poly({0, 0, 4}),
            poly({0, 0, 0, -8}),
            poly({0, -2, 0, 8, 16}),
            poly({0, 1, 4, -4, -8, -16}),
            poly({0, 0, -3, 0, 12, 8, 16}),
            poly({0, 0, 6, 7, 0, -28, -8, -16}),
            poly({0, 1, -3, -10, -3, 8, 44, 8, 16})};
    return t;
}

namespace {

// Liftings behind the published D4/D6/E7 families (no perturbation is printed
// for these rows; the matrices below reproduce the published polynomials
// verbatim and certify det H_w = 1).
Lifting d4_lifting() {
    RationalMatrix gs = with_zero_column(
        int_matrix({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {1, 1, 1, 1}}));
    RationalMatrix p = int_matrix({{-1, -1, 0, 0, 0},
                                   {1, 0, -1, 0, 0},
                                   {0, -1, 0, -1, 0},
                                   {0, -1, 0, -1, -1}});
    return make_lifting(gs, p);
}

Lifting d6_lifting() {
    RationalMatrix gs = with_zero_column(int_matrix({{2, 0, 0, 0, 0, 0},
                                                     {0, 2, 0, 0, 0, 0},
                                                     {0, 0, 2, 0, 0, 0},
                                                     {0, 0, 0, 2, 0, 0},
                                                     {0, 0, 0, 0, 2, 0},
                                                     {1, 1, 1, 1, 1, 1}}));
    RationalMatrix p = int_matrix({{-1, -1, 0, 0, 0, 0, 0},
                                   {1, 0, -1, 0, 0, 0, 0},
                                   {0, -1, 0, -1, 0, 0, 0},
                                   {0, 0, 1, 0, -1, 0, 0},
                                   {0, 0, 0, -1, 0, -1, 0},
                                   {0, -1, 0, -1, 0, -1, -1}});
    return make_lifting(gs, p);
}

Lifting e7_lifting() {
    // dual representation: Construction A of the [7,4] Hamming code
    RationalMatrix gs = with_zero_column(int_matrix({{2, 0, 0, 0, 0, 0, 0},
                                                     {0, 2, 0, 0, 0, 0, 0},
                                                     {0, 0, 2, 0, 0, 0, 0},
                                                     {1, 0, 1, 1, 0, 0, 0},
                                                     {1, 1, 1, 0, 1, 0, 0},
                                                     {1, 1, 0, 0, 0, 1, 0},
                                                     {0, 1, 1, 0, 0, 0, 1}}));
    RationalMatrix p = int_matrix({{-1, 1, 0, 0, 0, 0, 0, 0},
                                   {-1, -1, 1, 0, 0, 0, 0, 0},
                                   {0, -1, -1, 1, 0, 0, 0, 0},
                                   {0, 0, -1, 0, 1, 0, 0, 0},
                                   {-1, 0, 0, -1, 0, 1, 0, 0},
                                   {-1, 0, 0, 0, -1, 0, 1, 0},
                                   {0, -1, 0, 0, 0, -1, 0, 1}});
    return make_lifting(gs, p);
}

}  // namespace

std::vector<NamedLattice> named_lattices() {
    std::vector<NamedLattice> out;
    auto add = [&out](const std::string& name, const RationalMatrix& gstar) {
        NamedLattice nl;
        nl.name = name;
        nl.n = static_cast<int>(gstar.rows());
        nl.gstar = gstar;
        nl.astar = gram(gstar);
        nl.a = inverse(nl.astar);
        out.push_back(std::move(nl));
    };
    for (int n : {1, 2, 3, 4}) {
        add("Z" + std::to_string(n), RationalMatrix::identity(n));
    }
    // square dual generators of the catalog liftings (last column dropped)
    for (int n : {3, 5, 7}) {
        Lifting l = dn_odd_perturbation(n);
        add("D" + std::to_string(n) + "Odd-dual-scaled", l.gstar.submatrix(0, 0, n, n));
    }
    for (int n : {2, 3, 4, 5}) {
        Lifting l = dn_star_perturbation(n);
        add("D" + std::to_string(n) + "Star", l.gstar.submatrix(0, 0, n, n));
    }
    add("E7", e7_lifting().gstar.submatrix(0, 0, 7, 7));
    E8Liftings e8 = e8_liftings();
    add("E8-rep1", e8.rep1);
    add("E8-rep2", e8.rep2);
    return out;
}

NamedLattice named_lattice(const std::string& name) {
    for (auto& nl : named_lattices())
        if (nl.name == name) return nl;
    throw argument_error("unknown lattice name: " + name);
}

std::vector<std::string> list_names() {
    std::vector<std::string> names = {"D3",  "D5",  "D7",  "D9", "D11", "D4", "D6", "E7"};
    for (int n = 1; n <= 10; ++n) names.push_back("D" + std::to_string(n) + "star");
    names.push_back("E8-rep1-baseline");
    names.push_back("E8-rep1-P1");
    names.push_back("E8-rep2-baseline");
    names.push_back("E8-rep2-P2");
    names.push_back("Z1plus2Z-c0");
    names.push_back("Z1plus2Z-c1");
    names.push_back("Z1plus2Z-c2");
    return names;
}

CatalogEntry get(const std::string& name) {
    auto starts = [&name](const std::string& p) { return name.rfind(p, 0) == 0; };
    if (name == "D4") return {name, "D4 (published family; second condition unsatisfiable)", d4_lifting()};
    if (name == "D6") return {name, "D6 (published family)", d6_lifting()};
    if (name == "E7") return {name, "E7 (published family)", e7_lifting()};
    if (name == "E8-rep1-baseline")
        return {name, "E8, standard representation, unperturbed", e8_liftings().rep1_baseline()};
    if (name == "E8-rep1-P1")
        return {name, "E8, standard representation, optimized perturbation", e8_liftings().rep1_p1()};
    if (name == "E8-rep2-baseline")
        return {name, "E8, Construction-A representation, unperturbed", e8_liftings().rep2_baseline()};
    if (name == "E8-rep2-P2")
        return {name, "E8, Construction-A representation, optimized perturbation",
                e8_liftings().rep2_p2()};
    if (starts("Z1plus2Z-c")) {
        long c = std::stol(name.substr(10));
        return {name, "Z + 2Z (scaled), shift c=" + std::to_string(c),
                rank2_analysis(1, 2).lifting(c)};
    }
    if (starts("D") && name.size() > 5 && name.substr(name.size() - 4) == "star") {
        int n = std::stoi(name.substr(1, name.size() - 5));
        return {name, "D" + std::to_string(n) + "* (alpha = 1)", dn_star_perturbation(n)};
    }
    if (starts("D")) {
        int n = std::stoi(name.substr(1));
        return {name, "D" + std::to_string(n) + " (alpha = 0)", dn_odd_perturbation(n)};
    }
    throw argument_error("unknown catalog name: " + name);
}

}  // namespace catalog
}  // namespace latproj
