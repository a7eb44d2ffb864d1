#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latproj/lattice.hpp"
#include "oracle.hpp"

using namespace latproj;

namespace {

std::vector<Int> random_primitive(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    for (;;) {
        std::vector<Int> v(n);
        for (auto& x : v) x = d(rng);
        if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) continue;
        Int g = 0;
        for (const auto& x : v) g = gcd(g, x);
        for (auto& x : v) x /= g;
        return v;
    }
}

RationalMatrix random_pd_gram(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> d(-4, 4);
    for (;;) {
        RationalMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) g(i, j) = d(rng);
        if (det(g) == 0) continue;
        return gram(g);
    }
}

}  // namespace

TEST_CASE("lattice construction guards") {
    CHECK_THROWS_AS(Lattice(RationalMatrix::from_rows({{1, 2}, {2, 1}})), definiteness_error);
    CHECK_THROWS_AS(Lattice(RationalMatrix::from_rows({{1, 2}, {3, 4}})), definiteness_error);
    CHECK_THROWS_AS(Lattice(RationalMatrix::identity(2), RationalMatrix::from_rows({{2, 0}, {0, 1}})),
                    argument_error);
}

TEST_CASE("dual") {
    Lattice z3 = zn(3);
    CHECK(z3.dual().gram_matrix() == z3.gram_matrix());

    RationalMatrix g1(1, 1);
    g1(0, 0) = 2;
    CHECK(Lattice(g1).dual().gram_matrix()(0, 0) == make_rat(1, 2));

    RationalMatrix a2 = RationalMatrix::from_rows({{2, -1}, {-1, 2}});
    RationalMatrix d = Lattice(a2).dual().gram_matrix();
    CHECK(d(0, 0) == make_rat(2, 3));
    CHECK(d(0, 1) == make_rat(1, 3));

    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        Lattice l(random_pd_gram(rng, 2 + i % 4));
        CHECK(l.dual().dual().gram_matrix() == l.gram_matrix());
    }
}

TEST_CASE("minimal norm basics") {
    CHECK(zn(4).minimal_norm() == 1);
    CHECK(Lattice(RationalMatrix::from_rows({{2, -1}, {-1, 2}})).minimal_norm() == 2);
}

TEST_CASE("minimal norm agrees with the box oracle") {
    std::mt19937_64 rng(1234);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t n = 2 + iter % 5;  // 2..6
        RationalMatrix a = random_pd_gram(rng, n);
        CHECK(Lattice(a).minimal_norm() == oracle::min_norm_reduced_box(a));
    }
    // skewed projection grams as well
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Int> v = random_primitive(rng, 4, 40);
        Lattice l = project_orthogonal(v);
        CHECK(l.minimal_norm() == oracle::min_norm_reduced_box(l.gram_matrix()));
    }
}

TEST_CASE("project_orthogonal") {
    SUBCASE("axis gives the cubic lattice") {
        Lattice l = project_orthogonal({Int(1), Int(0), Int(0)});
        CHECK(l.gram_matrix() == RationalMatrix::identity(2));
    }
    SUBCASE("plane diagonal") {
        Lattice l = project_orthogonal({Int(1), Int(1)});
        CHECK(l.gram_matrix()(0, 0) == make_rat(1, 2));
    }
    SUBCASE("published vector determinant") {
        Lattice l = project_orthogonal({Int(1), Int(29), Int(37), Int(268)});
        CHECK(l.determinant() == make_rat(1, 74035));
    }
    SUBCASE("primitivity enforced") {
        CHECK_THROWS_AS(project_orthogonal({Int(2), Int(2)}), primitivity_error);
    }
    SUBCASE("generator reproduces the gram") {
        Lattice l = project_orthogonal({Int(2), Int(3), Int(5)});
        REQUIRE(l.generator().has_value());
        CHECK(gram(*l.generator()) == l.gram_matrix());
    }
    SUBCASE("det law over random ambient dimensions") {
        std::mt19937_64 rng(77);
        for (int iter = 0; iter < 40; ++iter) {
            std::size_t dim = 2 + iter % 6;  // 2..7
            std::vector<Int> v = random_primitive(rng, dim, 25);
            Int n2 = 0;
            for (const auto& x : v) n2 += x * x;
            CHECK(project_orthogonal(v).determinant() == make_rat(1, n2));
        }
    }
}

TEST_CASE("center density") {
    DensityReport d = zn(2).center_density();
    CHECK(d.center_density_sq == make_rat(1, 16));
    CHECK(d.center_density == doctest::Approx(0.25).epsilon(1e-12));

    SUBCASE("published vectors") {
        auto check_row = [](std::vector<long> vl, double r_ref, double d_ref) {
            std::vector<Int> v(vl.begin(), vl.end());
            DensityReport rep = project_orthogonal(v).center_density();
            CHECK(rep.min_dist == doctest::Approx(r_ref).epsilon(5e-5));
            CHECK(std::abs(rep.center_density - d_ref) < 5e-6);
        };
        check_row({1, 29, 37, 268}, 0.172147, 0.173511);
        check_row({1, 8, 64, 292}, 0.163858, 0.164452);
    }
}

TEST_CASE("r_of_v") {
    CHECK(r_of_v({Int(1), Int(0), Int(0)}).r_sq == 1);
    RofV r = r_of_v({Int(1), Int(29), Int(37), Int(268)});
    CHECK(r.r_sq == make_rat(2194, 74035));
    CHECK(std::abs(r.r - 0.172147) < 5e-6);
    RofV r2 = r_of_v({Int(1), Int(157), Int(164), Int(195)});
    CHECK(std::abs(r2.r - 0.16386) < 5e-5);
}

TEST_CASE("ambient dimension 2: every projection is half-density") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        std::vector<Int> v = random_primitive(rng, 2, 50);
        DensityReport d = project_orthogonal(v).center_density();
        CHECK(d.center_density_sq == make_rat(1, 4));
        // r(v) * |v| = 1
        Int n2 = v[0] * v[0] + v[1] * v[1];
        CHECK(d.min_norm2 * n2 == 1);
    }
}

TEST_CASE("density invariances") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10; ++i) {
        RationalMatrix a = random_pd_gram(rng, 3);
        Lattice l(a);
        Rat m = l.minimal_norm();
        DensityReport d0 = l.center_density();

        // unimodular change of generator preserves density
        RationalMatrix u = RationalMatrix::from_rows({{1, 0, 0}, {2, 1, 0}, {-1, 3, 1}});
        Lattice lu(u * a * u.transpose());
        CHECK(lu.center_density().center_density_sq == d0.center_density_sq);

        // scaling the gram by c^2 scales the minimum, not the density
        Lattice ls(a * Rat(9));
        CHECK(ls.minimal_norm() == m * 9);
        CHECK(ls.center_density().center_density_sq == d0.center_density_sq);
    }
}
