#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kothe/field.hpp"
#include "kothe/mat.hpp"

using namespace kothe::la;

TEST_CASE("rref of identity and zero") {
    Field f = Field::gfp(5);
    auto rr = rref(Mat::identity(f, 3));
    CHECK(rr.rank == 3);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(rr.r == Mat::identity(f, 3));

    auto rz = rref(Mat::zeros(f, 2, 4));
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());
    CHECK(rz.r.is_zero());
}

TEST_CASE("rank 1 over GF(5): second row is a multiple of the first") {
    Field f = Field::gfp(5);
    Mat m = Mat::from_ints(f, {{2, 4}, {1, 2}});
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel_basis shapes and membership") {
    Field f = Field::gfp(7);
    CHECK(kernel_basis(Mat::identity(f, 4)).cols() == 0);
    CHECK(kernel_basis(Mat::zeros(f, 1, 3)).cols() == 3);

    Field q = Field::rationals();
    Mat m = Mat::from_ints(q, {{1, 1}});
    Mat k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(mul(m, k).is_zero());
    // spans (1,-1)
    CHECK(k.get(0, 0) == -k.get(1, 0));
}

TEST_CASE("solve basics") {
    Field f = Field::gfp(7);
    Mat a = Mat::from_ints(f, {{3}});
    Mat b = Mat::from_ints(f, {{1}});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(x->get(0, 0).u() == 5);  // 3*5 = 15 = 1 mod 7

    Mat id = Mat::identity(f, 3);
    Mat rhs = Mat::from_ints(f, {{1}, {2}, {3}});
    CHECK(*solve(id, rhs) == rhs);

    Mat zero = Mat::zeros(f, 2, 2);
    Mat nz = Mat::from_ints(f, {{1}, {0}});
    CHECK(!solve(zero, nz).has_value());

    CHECK_THROWS_AS(solve(Mat::zeros(f, 2, 2), Mat::zeros(f, 3, 1)), kothe::Error);
}

TEST_CASE("rank(m) == rank(transpose(m)) on random matrices, both fields") {
    Rng rng(123);
    for (const Field& f : {Field::gfp(2), Field::gfp(5), Field::rationals()}) {
        for (int it = 0; it < 20; ++it) {
            Mat m = random_matrix(rng, f, 1 + rng.below(8), 1 + rng.below(8));
            CHECK(rank(m) == rank(transpose(m)));
        }
    }
}

TEST_CASE("rank-nullity on seeded random matrices") {
    Rng rng(99);
    for (const Field& f : {Field::gfp(3), Field::rationals()}) {
        for (int it = 0; it < 20; ++it) {
            Mat m = random_matrix(rng, f, 1 + rng.below(7), 1 + rng.below(7));
            Mat k = kernel_basis(m);
            CHECK(m.cols() == rank(m) + k.cols());
            if (k.cols()) CHECK(mul(m, k).is_zero());
            CHECK(rank(k) == k.cols());  // columns independent
        }
    }
}

TEST_CASE("GF(p) matches integer arithmetic mod p on random products") {
    Rng rng(5);
    const uint32_t p = 13;
    Field f = Field::gfp(p);
    for (int it = 0; it < 10; ++it) {
        std::size_t n = 1 + rng.below(6), m = 1 + rng.below(6), k = 1 + rng.below(6);
        std::vector<std::vector<long long>> ar(n, std::vector<long long>(m)),
            br(m, std::vector<long long>(k));
        for (auto& row : ar)
            for (auto& x : row) x = static_cast<long long>(rng.below(1000)) - 500;
        for (auto& row : br)
            for (auto& x : row) x = static_cast<long long>(rng.below(1000)) - 500;
        Mat a = Mat::from_ints(f, ar), b = Mat::from_ints(f, br);
        Mat c = mul(a, b);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                long long acc = 0;
                for (std::size_t t = 0; t < m; ++t) acc += ar[i][t] * br[t][j];
                CHECK(c.gf_at(i, j) == gf::from_int(acc, p));
            }
    }
}

TEST_CASE("rational entries stay canonical") {
    Field q = Field::rationals();
    Mat a = Mat::zeros(q, 1, 2);
    a.set(0, 0, Fel::parse(q, "6/4"));
    CHECK(a.get(0, 0).str() == "3/2");
    a.set(0, 1, Fel::parse(q, "-3/-6"));
    CHECK(a.get(0, 1).str() == "1/2");
    Mat s = add(a, a);
    CHECK(s.get(0, 0).str() == "3");
    // denominators positive after arithmetic
    CHECK(s.q_at(0, 1).get_den() > 0);
}

TEST_CASE("subspace sum and intersection") {
    Field f = Field::gfp(5);
    Mat e1 = Mat::from_ints(f, {{1}, {0}, {0}});
    Mat e12 = Mat::from_ints(f, {{1, 0}, {0, 1}, {0, 0}});
    Mat e23 = Mat::from_ints(f, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(rank(subspace_sum(e12, e23)) == 3);
    Mat inter = subspace_intersection(e12, e23);
    CHECK(inter.cols() == 1);
    CHECK(in_col_span(inter, Mat::from_ints(f, {{0}, {1}, {0}})));
    CHECK(in_col_span(e12, e1));
    CHECK(!in_col_span(e23, e1));
}

TEST_CASE("min_poly of nilpotent and idempotent matrices") {
    Field f = Field::gfp(3);
    Mat nil = Mat::from_ints(f, {{0, 1}, {0, 0}});
    auto mp = min_poly(nil);  // x^2
    REQUIRE(mp.size() == 3);
    CHECK(mp[0].is_zero());
    CHECK(mp[1].is_zero());
    CHECK(mp[2].is_one());

    Mat proj = Mat::from_ints(f, {{1, 0}, {0, 0}});
    auto mp2 = min_poly(proj);  // x^2 - x
    REQUIRE(mp2.size() == 3);
    CHECK(mp2[0].is_zero());
    CHECK(mp2[1] == -Fel::one(f));
}

TEST_CASE("pow and block_diag") {
    Field f = Field::gfp(7);
    Mat a = Mat::from_ints(f, {{1, 1}, {0, 1}});
    Mat a5 = pow(a, 5);
    CHECK(a5.get(0, 1).u() == 5);
    Mat bd = block_diag({a, Mat::identity(f, 1)}, f);
    CHECK(bd.rows() == 3);
    CHECK(bd.get(2, 2).is_one());
    CHECK(bd.get(0, 2).is_zero());
}
