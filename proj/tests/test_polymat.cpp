#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latproj/catalog.hpp"
#include "latproj/poly_matrix.hpp"

using namespace latproj;

namespace {

IntPoly poly(std::vector<long> asc) {
    std::vector<Int> c(asc.begin(), asc.end());
    return IntPoly(std::move(c));
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int maxdeg) {
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    PolyMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            std::vector<Int> cs(deg(rng) + 1);
            for (auto& x : cs) x = coeff(rng);
            m(i, j) = IntPoly(std::move(cs));
        }
    return m;
}

}  // namespace

TEST_CASE("IntPoly arithmetic and invariants") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    IntPoly p = poly({1, 3, 0, 2});  // 2w^3 + 3w + 1
    CHECK(p.degree() == 3);
    CHECK(p.leading() == 2);
    CHECK(p.eval(2) == 23);
    CHECK((p - p).is_zero());
    CHECK(p.pretty() == "2w^3+3w+1");
    CHECK(poly({0, 5, 0, 20, 0, 16}).pretty() == "16w^5+20w^3+5w");
    CHECK(poly({1, -1}).pretty() == "-w+1");

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int i = 0; i < 200; ++i) {
        std::vector<Int> a(1 + i % 5), b(1 + (i / 2) % 5);
        for (auto& x : a) x = c(rng);
        for (auto& x : b) x = c(rng);
        IntPoly pa(std::move(a)), pb(std::move(b));
        if (!pa.is_zero() && !pb.is_zero())
            CHECK((pa * pb).degree() == pa.degree() + pb.degree());
        if (!pb.is_zero()) CHECK((pa * pb).divexact(pb) == pa);
        Int w0 = c(rng);
        CHECK((pa * pb).eval(w0) == pa.eval(w0) * pb.eval(w0));
        CHECK((pa + pb).eval(w0) == pa.eval(w0) + pb.eval(w0));
    }
    CHECK_THROWS_AS(poly({1, 1}).divexact(poly({0, 3})), argument_error);
}

TEST_CASE("coeff text round trip") {
    IntPoly p = poly({1, 3, 0, 2});
    CHECK(IntPoly::from_coeff_text(p.coeff_text()) == p);
    CHECK(IntPoly::from_coeff_text("0").is_zero());
}

TEST_CASE("lift matrix") {
    RationalMatrix gs = RationalMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
    RationalMatrix p = RationalMatrix::from_rows({{0, 1, 0}, {0, 0, 1}});
    PolyMatrix m = lift_matrix(gs, p);
    CHECK(m(0, 0) == poly({0, 1}));
    CHECK(m(0, 1) == poly({1}));
    CHECK(m(1, 2) == poly({1}));

    PolyMatrix z = lift_matrix(gs, RationalMatrix(2, 3));
    CHECK(z(0, 0) == poly({0, 1}));
    CHECK(z(0, 1).is_zero());

    CHECK_THROWS_AS(lift_matrix(gs, RationalMatrix(2, 4)), dimension_error);
}

TEST_CASE("lift matrix reproduces the printed 5-dimensional display") {
    // the published display pairs the positive-diagonal dual generator with
    // this perturbation; first row of the result is (2w, 0, 0, -1, 1, 0)
    RationalMatrix gs = RationalMatrix::from_rows({{2, 0, 0, 0, 0, 0},
                                                   {0, 2, 0, 0, 0, 0},
                                                   {0, 0, 2, 0, 0, 0},
                                                   {0, 0, 0, 2, 0, 0},
                                                   {1, 1, 1, 1, 1, 0}});
    RationalMatrix p = RationalMatrix::from_rows({{0, 0, 0, -1, 1, 0},
                                                  {0, 0, 1, 0, -1, 0},
                                                  {0, -1, 0, 1, 0, 0},
                                                  {1, 0, -1, 0, 0, 1},
                                                  {0, 0, 0, 0, 0, 1}});
    PolyMatrix gw = lift_matrix(gs, p);
    CHECK(gw(0, 0) == poly({0, 2}));
    CHECK(gw(0, 3) == poly({-1}));
    CHECK(gw(0, 4) == poly({1}));
    CHECK(gw(4, 0) == poly({0, 1}));
    CHECK(gw(4, 5) == poly({1}));
}

TEST_CASE("poly_det") {
    PolyMatrix m(2, 2);
    m(0, 0) = poly({0, 1});
    m(0, 1) = poly({1});
    m(1, 1) = poly({0, 1});
    CHECK(poly_det(m) == poly({0, 0, 1}));  // w^2

    CHECK_THROWS_AS(poly_det(PolyMatrix(2, 3)), dimension_error);

    // eval/det commute on random instances
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t n = 2 + iter % 4;
        PolyMatrix pm = random_poly_matrix(rng, n, n, 2);
        Int w0 = (iter % 7) - 3;
        CHECK(poly_det(pm).eval(w0) == det(pm.eval(w0)).get_num());
    }
}

TEST_CASE("cross product") {
    SUBCASE("textbook 2x3") {
        PolyMatrix m(2, 3);
        m(0, 0) = poly({0, 1});
        m(0, 1) = poly({1});
        m(1, 1) = poly({0, 1});
        m(1, 2) = poly({1});
        auto c = cross_product(m);
        // (1, -w, w^2) up to global sign
        bool direct = c[0] == poly({1}) && c[1] == poly({0, -1}) && c[2] == poly({0, 0, 1});
        bool flipped = c[0] == poly({-1}) && c[1] == poly({0, 1}) && c[2] == poly({0, 0, -1});
        CHECK((direct || flipped));
    }
    SUBCASE("orthogonal to every row, alternating under row swap") {
        std::mt19937_64 rng(17);
        for (int iter = 0; iter < 30; ++iter) {
            std::size_t n = 2 + iter % 4;
            PolyMatrix m = random_poly_matrix(rng, n, n + 1, 2);
            auto c = cross_product(m);
            for (std::size_t i = 0; i < n; ++i) {
                IntPoly dot;
                for (std::size_t j = 0; j <= n; ++j) dot = dot + m(i, j) * c[j];
                CHECK(dot.is_zero());
            }
            PolyMatrix swapped = m;
            for (std::size_t j = 0; j <= n; ++j) std::swap(swapped(0, j), swapped(1, j));
            auto cs = cross_product(swapped);
            for (std::size_t j = 0; j <= n; ++j) CHECK(cs[j] == -c[j]);
        }
    }
    CHECK_THROWS_AS(cross_product(PolyMatrix(3, 3)), dimension_error);
}

TEST_CASE("degree law for zero-column liftings") {
    // the component indexed by the zero column reaches degree n with leading
    // coefficient +-det(Gbar*); all others stay below
    for (const char* name : {"D3", "D5", "D3star", "D4star"}) {
        auto entry = catalog::get(name);
        auto fam = cross_product(entry.lifting.lifted());
        std::size_t n = entry.lifting.dim();
        REQUIRE(entry.lifting.has_zero_last_column());
        Rat dg = det(entry.lifting.gstar.submatrix(0, 0, n, n));
        CHECK(fam[n].degree() == static_cast<int>(n));
        CHECK(abs(Rat(fam[n].leading())) == abs(dg));
        for (std::size_t i = 0; i < n; ++i) CHECK(fam[i].degree() <= static_cast<int>(n) - 1);
    }
}
