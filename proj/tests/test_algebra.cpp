#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "kothe/algebra.hpp"

using namespace kothe;
using namespace kothe::alg;
using la::Fel;
using la::Field;
using la::Mat;
using la::Rng;

namespace {

// K[x]/(x^k) as structure constants
FDAlgebra truncated_poly(const Field& f, std::size_t k) {
    Mat table = Mat::zeros(f, k * k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) table.set_int(i * k + j, i + j, 1);
    Mat unit = Mat::zeros(f, 1, k);
    unit.set_int(0, 0, 1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("x^" + std::to_string(i));
    return FDAlgebra::make(f, names, unit, table);
}

// K x K
FDAlgebra product_of_fields(const Field& f) {
    Mat table = Mat::zeros(f, 4, 2);
    table.set_int(0, 0, 1);
    table.set_int(3, 1, 1);
    Mat unit = Mat::from_ints(f, {{1, 1}});
    return FDAlgebra::make(f, {"u", "v"}, unit, table);
}

// K[x,y]/(x,y)^2: radical square zero, 2-generated radical
FDAlgebra two_gen_rad_square_zero(const Field& f) {
    Mat table = Mat::zeros(f, 9, 3);
    table.set_int(0 * 3 + 0, 0, 1);
    table.set_int(0 * 3 + 1, 1, 1);
    table.set_int(0 * 3 + 2, 2, 1);
    table.set_int(1 * 3 + 0, 1, 1);
    table.set_int(2 * 3 + 0, 2, 1);
    Mat unit = Mat::from_ints(f, {{1, 0, 0}});
    return FDAlgebra::make(f, {"1", "x", "y"}, unit, table);
}

qv::Quiver a2_quiver() {
    return qv::parse_quiver("quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }");
}

qv::Quiver b2_quiver() {
    return qv::parse_quiver(
        "quiver B2 { vertices: 1 2 3 4; arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4; }");
}

}  // namespace

TEST_CASE("construction validates unit laws") {
    Field f = Field::gfp(5);
    CHECK_NOTHROW(truncated_poly(f, 3));
    Mat unit = Mat::from_ints(f, {{1, 0}});
    Mat t2 = Mat::zeros(f, 4, 2);
    t2.set_int(0, 0, 1);
    t2.set_int(1, 1, 1);
    t2.set_int(2, 0, 1);  // x*1 = 1 breaks the unit law
    CHECK_THROWS_AS(FDAlgebra::make(f, {"1", "x"}, unit, t2), Error);
}

TEST_CASE("construction rejects non-associative tables") {
    Field f = Field::gfp(5);
    // basis 1, x, y with x*y = 1 but y*x = 0 and all other products of
    // generators zero: (x*y)*x = x, x*(y*x) = 0
    Mat t = Mat::zeros(f, 9, 3);
    t.set_int(0 * 3 + 0, 0, 1);
    t.set_int(0 * 3 + 1, 1, 1);
    t.set_int(0 * 3 + 2, 2, 1);
    t.set_int(1 * 3 + 0, 1, 1);
    t.set_int(2 * 3 + 0, 2, 1);
    t.set_int(1 * 3 + 2, 0, 1);  // x*y = 1
    Mat unit = Mat::from_ints(f, {{1, 0, 0}});
    CHECK_THROWS_AS(FDAlgebra::make(f, {"1", "x", "y"}, unit, t), Error);
}

TEST_CASE("path algebra dimensions") {
    Field f = Field::gfp(5);
    CHECK(path_algebra(a2_quiver(), f).algebra.dim() == 3);
    CHECK(path_algebra(b2_quiver(), f).algebra.dim() == 7);
    qv::Quiver one = qv::parse_quiver("quiver K { vertices: v; arrows: }");
    CHECK(path_algebra(one, f).algebra.dim() == 1);
    qv::Quiver a3 =
        qv::parse_quiver("quiver A3 { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; }");
    CHECK(path_algebra(a3, f).algebra.dim() == 6);
    CHECK_THROWS_AS(
        path_algebra(qv::parse_quiver("quiver L { vertices: 1; arrows: a: 1 -> 1; }"), f),
        Error);
}

TEST_CASE("jacobson radical: known cases") {
    Field f3 = Field::gfp(3);
    FDAlgebra m2 = matrix_ring(truncated_poly(f3, 1), 2);
    CHECK(jacobson_radical(m2).rows() == 0);

    FDAlgebra tp = truncated_poly(Field::gfp(5), 2);
    Mat j = jacobson_radical(tp);
    REQUIRE(j.rows() == 1);
    CHECK(j.get(0, 0).is_zero());
    CHECK(j.get(0, 1).is_one());

    PathAlgebra pa = path_algebra(a2_quiver(), Field::gfp(2));
    Mat j2 = jacobson_radical(pa.algebra);
    REQUIRE(j2.rows() == 1);
    CHECK(j2.get(0, 2).is_one());

    PathAlgebra paq = path_algebra(a2_quiver(), Field::rationals());
    CHECK(jacobson_radical(paq.algebra).rows() == 1);

    CHECK(jacobson_radical(two_gen_rad_square_zero(Field::gfp(2))).rows() == 2);
}

TEST_CASE("radical in small characteristic (degenerate trace forms)") {
    Field f2 = Field::gfp(2);
    // group algebra of C2 over GF(2): J = span{1+g}
    Mat table = Mat::zeros(f2, 4, 2);
    table.set_int(0, 0, 1);
    table.set_int(1, 1, 1);
    table.set_int(2, 1, 1);
    table.set_int(3, 0, 1);
    FDAlgebra c2 = FDAlgebra::make(f2, {"1", "g"}, Mat::from_ints(f2, {{1, 0}}), table);
    Mat j = jacobson_radical(c2);
    REQUIRE(j.rows() == 1);
    CHECK(j.get(0, 0).is_one());
    CHECK(j.get(0, 1).is_one());

    FDAlgebra m22 = matrix_ring(truncated_poly(f2, 1), 2);
    CHECK(jacobson_radical(m22).rows() == 0);

    FDAlgebra m2tp = matrix_ring(truncated_poly(f2, 2), 2);
    CHECK(jacobson_radical(m2tp).rows() == 4);
}

TEST_CASE("basics: product of fields") {
    Rng rng(7);
    Basics b = basics(product_of_fields(Field::gfp(3)), rng);
    CHECK(b.m == 2);
    CHECK(b.p == std::vector<std::size_t>{1, 1});
    CHECK(b.basic);
}

TEST_CASE("basics: Mat_2(GF(3)) has one class with multiplicity 2") {
    Rng rng(7);
    FDAlgebra m2 = matrix_ring(truncated_poly(Field::gfp(3), 1), 2);
    Basics b = basics(m2, rng);
    CHECK(b.m == 1);
    CHECK(b.p == std::vector<std::size_t>{2});
    CHECK(!b.basic);
    CHECK(b.div_dim == std::vector<std::size_t>{1});
}

TEST_CASE("basics: path algebra of the 4-star is basic with m = 4") {
    for (const Field& f : {Field::gfp(2), Field::gfp(5), Field::rationals()}) {
        Rng rng(7);
        PathAlgebra pa = path_algebra(b2_quiver(), f);
        Basics b = basics(pa.algebra, rng);
        CHECK(b.m == 4);
        CHECK(b.p == std::vector<std::size_t>(4, 1));
        CHECK(b.basic);
    }
}

TEST_CASE("basics: matrix rings scale multiplicities") {
    Rng rng(3);
    FDAlgebra a = matrix_ring(truncated_poly(Field::gfp(3), 2), 2);
    CHECK(a.dim() == 8);
    Basics b = basics(a, rng);
    CHECK(b.m == 1);
    CHECK(b.p == std::vector<std::size_t>{2});

    FDAlgebra a2 = matrix_ring(path_algebra(a2_quiver(), Field::gfp(3)).algebra, 2);
    Basics b2 = basics(a2, rng);
    CHECK(b2.m == 2);
    CHECK(b2.p == std::vector<std::size_t>{2, 2});
}

TEST_CASE("trace ideal and full idempotents") {
    Field f3 = Field::gfp(3);
    FDAlgebra m2 = matrix_ring(truncated_poly(f3, 1), 2);
    Mat e = Mat::from_ints(f3, {{1, 0, 0, 0}});  // E11
    CHECK(m2.is_idempotent(e));
    CHECK(is_full_idempotent(m2, e));
    CHECK(is_full_idempotent(m2, m2.unit()));

    FDAlgebra pf = product_of_fields(f3);
    Mat e1 = Mat::from_ints(f3, {{1, 0}});
    CHECK(!is_full_idempotent(pf, e1));
    CHECK(trace_ideal(pf, e1).rows() == 1);
}

TEST_CASE("left semicentral idempotents") {
    Field f = Field::gfp(5);
    FDAlgebra pf = product_of_fields(f);
    CHECK(is_left_semicentral(pf, Mat::from_ints(f, {{1, 0}})));

    PathAlgebra pa = path_algebra(a2_quiver(), f);
    // source vertex idempotent: Ae1 contains a = a*e1 but e1*a*e1 = 0
    CHECK(!is_left_semicentral(pa.algebra, pa.vertex_idem(0)));
    CHECK(is_left_semicentral(pa.algebra, pa.algebra.unit()));
    CHECK(is_left_semicentral(pa.algebra, pa.vertex_idem(1)));
}

TEST_CASE("corner algebras") {
    Rng rng(2);
    Field f3 = Field::gfp(3);
    FDAlgebra m2 = matrix_ring(truncated_poly(f3, 1), 2);
    Corner c = corner_algebra(m2, Mat::from_ints(f3, {{1, 0, 0, 0}}));
    CHECK(c.algebra.dim() == 1);

    Corner full = corner_algebra(m2, m2.unit());
    CHECK(full.algebra.dim() == m2.dim());

    FDAlgebra a = matrix_ring(path_algebra(a2_quiver(), f3).algebra, 2);
    Basics b = basics(a, rng);
    Corner basic = corner_algebra(a, b.basic_idem);
    CHECK(basic.algebra.dim() == 3);
    Basics bb = basics(basic.algebra, rng);
    CHECK(bb.m == 2);
    CHECK(bb.p == std::vector<std::size_t>{1, 1});

    // E12 is not idempotent
    CHECK_THROWS_AS(corner_algebra(m2, Mat::from_ints(f3, {{0, 1, 0, 0}})), Error);
}

TEST_CASE("opposite algebra") {
    Field f = Field::gfp(5);
    FDAlgebra pf = product_of_fields(f);
    CHECK(opposite(pf).table() == pf.table());

    PathAlgebra pa = path_algebra(a2_quiver(), f);
    FDAlgebra op = opposite(pa.algebra);
    CHECK(op.dim() == 3);
    CHECK(opposite(op).table() == pa.algebra.table());
    // opposite of a path algebra is the path algebra of the reversed quiver
    PathAlgebra rev = path_algebra(a2_quiver().reversed(), f);
    CHECK(op.table() == rev.algebra.table());
}

TEST_CASE("module invariants of regular modules") {
    Rng rng(11);
    {
        auto a = std::make_shared<const FDAlgebra>(product_of_fields(Field::gfp(3)));
        Basics b = basics(*a, rng);
        ModuleInvariants inv = module_invariants(regular_module(a), b);
        CHECK(inv.c_total == std::vector<std::size_t>{1, 1});
        CHECK(inv.length == 2);
    }
    {
        auto a = std::make_shared<const FDAlgebra>(truncated_poly(Field::gfp(5), 2));
        Basics b = basics(*a, rng);
        ModuleInvariants inv = module_invariants(regular_module(a), b);
        CHECK(inv.c_total == std::vector<std::size_t>{2});
        CHECK(inv.c_top == std::vector<std::size_t>{1});
        CHECK(inv.uniserial);
        CHECK(inv.simple_top);
    }
}

TEST_CASE("hom-length and radical-series composition counts agree") {
    Rng rng(13);
    std::vector<FDAlgebra> algebras;
    algebras.push_back(product_of_fields(Field::gfp(2)));
    algebras.push_back(truncated_poly(Field::gfp(2), 3));
    algebras.push_back(two_gen_rad_square_zero(Field::gfp(3)));
    algebras.push_back(path_algebra(a2_quiver(), Field::gfp(3)).algebra);
    algebras.push_back(matrix_ring(truncated_poly(Field::gfp(2), 1), 2));
    for (const auto& alg : algebras) {
        auto a = std::make_shared<const FDAlgebra>(alg);
        Basics b = basics(*a, rng);
        AModule reg = regular_module(a);
        CHECK(module_invariants(reg, b).c_total == c_total_radical_route(reg, b));
        AModule p0 = projective_module(a, b.prim[0]);
        CHECK(module_invariants(p0, b).c_total == c_total_radical_route(p0, b));
    }
}

TEST_CASE("min_generators vs brute force") {
    Rng rng(17);
    auto a = std::make_shared<const FDAlgebra>(product_of_fields(Field::gfp(2)));
    Basics b = basics(*a, rng);
    AModule p0 = projective_module(a, b.prim[b.rep_of[0]]);
    AModule s1s1 = direct_sum(p0, p0);
    CHECK(min_generators(s1s1, b) == 2);
    CHECK(brute_force_min_generators(s1s1) == 2);
    CHECK(is_k_generated(s1s1, b, 2));
    CHECK(!is_k_generated(s1s1, b, 1));

    AModule reg = regular_module(a);
    CHECK(min_generators(reg, b) == 1);
    CHECK(brute_force_min_generators(reg) == 1);

    // over Mat_2(GF(2)), S (+) S is cyclic since p = (2)
    auto m2 =
        std::make_shared<const FDAlgebra>(matrix_ring(truncated_poly(Field::gfp(2), 1), 2));
    Basics bm = basics(*m2, rng);
    AModule s = projective_module(m2, bm.prim[bm.rep_of[0]]);
    AModule ss = direct_sum(s, s);
    CHECK(min_generators(ss, bm) == 1);
    CHECK(brute_force_min_generators(ss) == 1);
}

TEST_CASE("uniserial checks against the exhaustive oracle") {
    Rng rng(19);
    auto a = std::make_shared<const FDAlgebra>(truncated_poly(Field::gfp(2), 3));
    Basics b = basics(*a, rng);
    AModule reg = regular_module(a);
    CHECK(is_uniserial_module(reg, b));
    CHECK(is_uniserial_exhaustive(reg));

    auto pf = std::make_shared<const FDAlgebra>(product_of_fields(Field::gfp(2)));
    Basics bp = basics(*pf, rng);
    AModule s1 = projective_module(pf, bp.prim[bp.rep_of[0]]);
    AModule s2 = projective_module(pf, bp.prim[bp.rep_of[1]]);
    AModule sum = direct_sum(s1, s2);
    CHECK(!is_uniserial_module(sum, bp));
    CHECK(!is_uniserial_exhaustive(sum));
    CHECK(is_uniserial_module(s1, bp));
    CHECK(is_uniserial_exhaustive(s1));
}

TEST_CASE("principal right ideal brute force") {
    CHECK(brute_force_principal_right_ideals(truncated_poly(Field::gfp(2), 2)));
    CHECK(brute_force_principal_right_ideals(truncated_poly(Field::gfp(2), 4)));
    // the triangular 2x2 algebra (= A2 path algebra) has the non-principal
    // right ideal spanned by the source idempotent and the arrow
    CHECK(!brute_force_principal_right_ideals(path_algebra(a2_quiver(), Field::gfp(2)).algebra));
    CHECK(!brute_force_principal_right_ideals(two_gen_rad_square_zero(Field::gfp(2))));
    // GF(2) x GF(2) is a principal ideal ring
    CHECK(brute_force_principal_right_ideals(product_of_fields(Field::gfp(2))));
}

TEST_CASE("indecomposability of modules") {
    Rng rng(23);
    auto a = std::make_shared<const FDAlgebra>(truncated_poly(Field::gfp(3), 2));
    AModule reg = regular_module(a);
    CHECK(is_indecomposable_amod(reg, rng));
    CHECK(!is_indecomposable_amod(direct_sum(reg, reg), rng));

    auto aq = std::make_shared<const FDAlgebra>(truncated_poly(Field::rationals(), 2));
    AModule regq = regular_module(aq);
    CHECK(is_indecomposable_amod(regq, rng));
    CHECK(!is_indecomposable_amod(direct_sum(regq, regq), rng));
}

TEST_CASE("wedderburn_is_division certificates") {
    Rng rng(29);
    CHECK(wedderburn_is_division(truncated_poly(Field::gfp(7), 1), rng));
    CHECK(!wedderburn_is_division(product_of_fields(Field::gfp(3)), rng));
    CHECK(!wedderburn_is_division(matrix_ring(truncated_poly(Field::gfp(2), 1), 2), rng));
    // GF(4) over GF(2): basis 1, w with w^2 = 1 + w
    Field f2 = Field::gfp(2);
    Mat table = Mat::zeros(f2, 4, 2);
    table.set_int(0, 0, 1);
    table.set_int(1, 1, 1);
    table.set_int(2, 1, 1);
    table.set_int(3, 0, 1);
    table.set_int(3, 1, 1);
    FDAlgebra gf4 = FDAlgebra::make(f2, {"1", "w"}, Mat::from_ints(f2, {{1, 0}}), table);
    CHECK(wedderburn_is_division(gf4, rng));
    // QQ(i)
    Field q = Field::rationals();
    Mat tq = Mat::zeros(q, 4, 2);
    tq.set_int(0, 0, 1);
    tq.set_int(1, 1, 1);
    tq.set_int(2, 1, 1);
    tq.set_int(3, 0, -1);
    FDAlgebra qi = FDAlgebra::make(q, {"1", "i"}, Mat::from_ints(q, {{1, 0}}), tq);
    CHECK(wedderburn_is_division(qi, rng));
    CHECK(!wedderburn_is_division(product_of_fields(q), rng));
}

TEST_CASE("exhaustive idempotent search") {
    auto idems = all_idempotents_exhaustive(product_of_fields(Field::gfp(2)));
    CHECK(idems.size() == 4);  // 0, e1, e2, 1
}

TEST_CASE("column and corner modules realize the Morita functors") {
    Rng rng(31);
    Field f3 = Field::gfp(3);
    FDAlgebra a0 = path_algebra(a2_quiver(), f3).algebra;
    auto a = std::make_shared<const FDAlgebra>(a0);
    FDAlgebra t0 = matrix_ring(a0, 2);
    Basics ba = basics(*a, rng);
    Basics bt = basics(t0, rng);
    CHECK(bt.m == 2);
    CHECK(bt.p == std::vector<std::size_t>{2, 2});

    AModule reg = regular_module(a);
    AModule col = column_module(t0, 2, reg);
    CHECK(col.dim() == 6);
    ModuleInvariants ia = module_invariants(reg, ba);
    ModuleInvariants it = module_invariants(col, bt);
    std::multiset<std::size_t> atop(ia.c_top.begin(), ia.c_top.end());
    std::multiset<std::size_t> ttop(it.c_top.begin(), it.c_top.end());
    CHECK(atop == ttop);

    Corner c = corner_algebra(t0, bt.basic_idem);
    AModule back = corner_module(c, col);
    CHECK(back.dim() == 3);
}

TEST_CASE("algebra JSON round trip is bit-exact") {
    for (const Field& f : {Field::gfp(5), Field::rationals()}) {
        FDAlgebra a = path_algebra(a2_quiver(), f).algebra;
        std::string s1 = algebra_to_json(a);
        FDAlgebra b = algebra_from_json(s1);
        std::string s2 = algebra_to_json(b);
        CHECK(s1 == s2);
        CHECK(a.table() == b.table());
        CHECK(a.unit() == b.unit());
    }
    CHECK_THROWS_AS(algebra_from_json("{ not json"), ParseError);
    CHECK_THROWS_AS(algebra_from_json("{\"format\":\"algebra-v1\",\"field\":\"GF(4)\","
                                      "\"dim\":1,\"basis\":[\"e\"],\"unit\":[\"1\"],"
                                      "\"mult\":[[0,0,[\"1\"]]]}"),
                    Error);
}
