#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "kothe/rep.hpp"

using namespace kothe;
using namespace kothe::rep;
using la::Field;
using la::Mat;
using la::Rng;

namespace {

Quiver a2() { return qv::parse_quiver("quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }"); }

Quiver b2_star() {
    return qv::parse_quiver(
        "quiver B2 { vertices: 1 2 3 4; arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4; }");
}

// the worked 4-star representation: K^2 at the center, maps [1 0], [0 1], [1 1]
Rep b2_m(const Field& f) {
    Quiver q = b2_star();
    std::vector<Mat> maps{Mat::from_ints(f, {{1, 0}}), Mat::from_ints(f, {{0, 1}}),
                          Mat::from_ints(f, {{1, 1}})};
    return Rep::make(q, f, {2, 1, 1, 1}, maps);
}

Rep p1_a2(const Field& f) {
    return Rep::make(a2(), f, {1, 1}, {Mat::identity(f, 1)});
}

const Field kFields[] = {Field::gfp(2), Field::gfp(3), Field::gfp(5), Field::rationals()};

}  // namespace

TEST_CASE("hom spaces: simples and projectives over A2") {
    for (const Field& f : kFields) {
        Rep s1 = Rep::simple(a2(), f, 0);
        Rep s2 = Rep::simple(a2(), f, 1);
        CHECK(hom_space(s1, s1).size() == 1);
        CHECK(hom_space(s1, s2).empty());
        // Hom(P1, S2) = 0: the intertwining law forces the vertex-2 block to 0
        CHECK(hom_space(p1_a2(f), s2).empty());
        CHECK(hom_space(p1_a2(f), s1).size() == 1);
    }
}

TEST_CASE("the 4-star representation is a brick") {
    for (const Field& f : kFields) {
        Rep m = b2_m(f);
        CHECK(hom_space(m, m).size() == 1);
    }
}

TEST_CASE("radical and top") {
    Field f = Field::gfp(5);
    CHECK(radical(Rep::simple(a2(), f, 0)).sub.total_dim() == 0);
    SubRep r = radical(p1_a2(f));
    CHECK(r.sub.dim == qv::DimVector{0, 1});
    CHECK(radical(b2_m(f)).sub.dim == qv::DimVector{0, 1, 1, 1});
    CHECK(top(p1_a2(f)).quot.dim == qv::DimVector{1, 0});
}

TEST_CASE("c-vectors") {
    for (const Field& f : kFields) {
        Rep m = b2_m(f);
        CHECK(c_top(m) == qv::DimVector{2, 0, 0, 0});
        CHECK(c_total(m) == qv::DimVector{2, 1, 1, 1});
        CHECK(c_soc(m) == qv::DimVector{0, 1, 1, 1});

        Rep p1 = p1_a2(f);
        CHECK(c_top(p1) == qv::DimVector{1, 0});
        CHECK(c_total(p1) == qv::DimVector{1, 1});
        CHECK(c_soc(p1) == qv::DimVector{0, 1});

        Rep s1 = Rep::simple(a2(), f, 0);
        CHECK(c_top(s1) == qv::DimVector{1, 0});
    }
}

TEST_CASE("projective representations from paths") {
    Field f = Field::gfp(3);
    Rep p1 = Rep::projective(a2(), f, 0);
    CHECK(p1.dim == qv::DimVector{1, 1});
    CHECK(p1.maps[0].get(0, 0).is_one());
    Rep p2 = Rep::projective(a2(), f, 1);
    CHECK(p2.dim == qv::DimVector{0, 1});
    Rep q1 = Rep::projective(b2_star(), f, 0);
    CHECK(q1.dim == qv::DimVector{1, 1, 1, 1});
    CHECK(Rep::projective(b2_star(), f, 1).dim == qv::DimVector{0, 1, 0, 0});
}

TEST_CASE("indecomposability") {
    Rng rng(5);
    for (const Field& f : kFields) {
        CHECK(is_indecomposable(Rep::simple(a2(), f, 0), rng));
        Rep s1 = Rep::simple(a2(), f, 0);
        CHECK(!is_indecomposable(direct_sum(s1, s1), rng));
        CHECK(is_indecomposable(b2_m(f), rng));
        CHECK(is_indecomposable(p1_a2(f), rng));
    }
}

TEST_CASE("decompose: known splittings") {
    Rng rng(7);
    Field f = Field::gfp(3);
    Rep p1 = p1_a2(f);
    Rep s1 = Rep::simple(a2(), f, 0);

    auto parts = decompose(direct_sum(p1, s1), rng);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first.dim == qv::DimVector{1, 0});
    CHECK(parts[1].first.dim == qv::DimVector{1, 1});

    auto self = decompose(b2_m(f), rng);
    REQUIRE(self.size() == 1);
    CHECK(self[0].second == 1);

    // the regular representation of the A2 path algebra is P1 (+) P2
    Rep reg = direct_sum(Rep::projective(a2(), f, 0), Rep::projective(a2(), f, 1));
    auto rparts = decompose(reg, rng);
    REQUIRE(rparts.size() == 2);
    for (auto& [p, mult] : rparts) {
        CHECK(mult == 1);
        CHECK(is_indecomposable(p, rng));
        bool is_p1 = isomorphic(p, Rep::projective(a2(), f, 0), rng);
        bool is_p2 = isomorphic(p, Rep::projective(a2(), f, 1), rng);
        CHECK((is_p1 || is_p2));
    }
}

TEST_CASE("Krull-Schmidt: two seeds give the same decomposition") {
    Field f = Field::gfp(2);
    Rep big = direct_sum(direct_sum(p1_a2(f), Rep::simple(a2(), f, 1)),
                         direct_sum(p1_a2(f), Rep::simple(a2(), f, 0)));
    Rng rng1(111), rng2(2222);
    auto d1 = decompose(big, rng1);
    auto d2 = decompose(big, rng2);
    REQUIRE(d1.size() == d2.size());
    Rng rng3(3);
    for (std::size_t i = 0; i < d1.size(); ++i) {
        CHECK(d1[i].first.dim == d2[i].first.dim);
        CHECK(d1[i].second == d2[i].second);
        CHECK(isomorphic(d1[i].first, d2[i].first, rng3));
    }
}

TEST_CASE("reflection functors: A2 cases") {
    for (const Field& f : kFields) {
        Rep p1 = p1_a2(f);
        Rep r = reflect_plus(p1, 1);
        CHECK(r.dim == qv::DimVector{1, 0});
        CHECK(r.quiver.arrows()[0].src == 1);  // arrow reversed

        Rep s2 = Rep::simple(a2(), f, 1);
        CHECK(reflect_plus(s2, 1).total_dim() == 0);

        Rep back = reflect_minus(r, 1);
        CHECK(back.dim == p1.dim);
        Rng rng(1);
        CHECK(isomorphic(back, p1, rng));

        CHECK_THROWS_AS(reflect_plus(p1, 0), Error);   // 0 is a source
        CHECK_THROWS_AS(reflect_minus(p1, 1), Error);  // 1 is a sink
    }
}

TEST_CASE("reflection roundtrip on the 4-star") {
    Field f = Field::gfp(5);
    Rng rng(9);
    Rep m = b2_m(f);
    Rep r = reflect_plus(m, 1);
    CHECK(r.dim == qv::DimVector{2, 1, 1, 1});  // s_2(2,1,1,1) = (2,1,1,1)
    Rep back = reflect_minus(r, 1);
    CHECK(isomorphic(back, m, rng));
}

TEST_CASE("enumerate indecomposables: A2 and A1") {
    Rng rng(13);
    for (const Field& f : kFields) {
        auto list = enumerate_indecomposables(a2(), f, rng);
        CHECK(list.size() == 3);
        std::set<qv::DimVector> dims;
        for (const Rep& m : list) dims.insert(m.dim);
        CHECK(dims == std::set<qv::DimVector>{{1, 0}, {0, 1}, {1, 1}});
    }
    Quiver one = qv::parse_quiver("quiver K { vertices: v; arrows: }");
    auto single = enumerate_indecomposables(one, Field::gfp(2), rng);
    CHECK(single.size() == 1);
}

TEST_CASE("enumerate indecomposables: 4-star has 12, one of dim (2,1,1,1)") {
    Rng rng(17);
    Field f = Field::gfp(5);
    auto list = enumerate_indecomposables(b2_star(), f, rng);
    REQUIRE(list.size() == 12);
    std::size_t found = 0;
    for (const Rep& m : list)
        if (m.dim == qv::DimVector{2, 1, 1, 1}) {
            ++found;
            CHECK(isomorphic(m, b2_m(f), rng));
        }
    CHECK(found == 1);
    std::set<qv::DimVector> dims;
    for (const Rep& m : list) dims.insert(m.dim);
    CHECK(dims.size() == 12);
}

TEST_CASE("Gabriel completeness: random small reps decompose into list members") {
    Rng rng(19);
    for (const Field& f : {Field::gfp(2), Field::gfp(3)}) {
        auto list = enumerate_indecomposables(a2(), f, rng);
        for (int it = 0; it < 10; ++it) {
            long d1 = static_cast<long>(rng.below(4));
            long d2 = static_cast<long>(rng.below(4));
            if (d1 + d2 == 0) continue;
            Mat map = la::random_matrix(rng, f, d2, d1);
            Rep m = Rep::make(a2(), f, {d1, d2}, {map});
            auto parts = decompose(m, rng);
            long total = 0;
            for (auto& [p, mult] : parts) {
                bool in_list = false;
                for (const Rep& l : list)
                    if (l.dim == p.dim && isomorphic(l, p, rng)) in_list = true;
                CHECK(in_list);
                total += p.total_dim() * static_cast<long>(mult);
            }
            CHECK(total == m.total_dim());
        }
    }
}

TEST_CASE("Hom dimension from projectives counts composition factors") {
    // dim Hom(P_v, M) = c_total(M)[v] on enumerated indecomposables
    Rng rng(23);
    for (const Field& f : {Field::gfp(3), Field::rationals()}) {
        for (const Quiver& q : {a2(), b2_star()}) {
            auto list = enumerate_indecomposables(q, f, rng);
            std::vector<Rep> projectives;
            for (std::size_t v = 0; v < q.num_vertices(); ++v)
                projectives.push_back(Rep::projective(q, f, v));
            for (const Rep& m : list)
                for (std::size_t v = 0; v < q.num_vertices(); ++v)
                    CHECK(hom_space(projectives[v], m).size() ==
                          static_cast<std::size_t>(c_total(m)[v]));
        }
    }
}

TEST_CASE("to_amodule carries the representation faithfully") {
    Rng rng(29);
    Field f = Field::gfp(3);
    alg::PathAlgebra pa = alg::path_algebra(b2_star(), f);
    auto aptr = std::make_shared<const alg::FDAlgebra>(pa.algebra);
    Rep m = b2_m(f);
    alg::AModule am = to_amodule(m, pa, aptr);
    CHECK(am.dim() == 5);
    alg::Basics b = alg::basics(pa.algebra, rng);
    alg::ModuleInvariants inv = alg::module_invariants(am, b);
    std::multiset<std::size_t> got(inv.c_top.begin(), inv.c_top.end());
    CHECK(got == std::multiset<std::size_t>{2, 0, 0, 0});
    CHECK(inv.length == 5);
    // verify the action respects the structure constants (untrusted build)
    std::vector<Mat> act;
    for (std::size_t i = 0; i < pa.algebra.dim(); ++i) act.push_back(am.action(i));
    CHECK_NOTHROW(alg::AModule::make(aptr, act, /*trusted=*/false));
}

TEST_CASE("rep file parse/print round trip") {
    Field f = Field::gfp(5);
    Rep m = b2_m(f);
    std::string text = print_rep(m);
    Rep m2 = parse_rep(text, b2_star(), f);
    CHECK(m == m2);
    CHECK(print_rep(m2) == text);

    Rep m3 = parse_rep("rep { dim: 2 1 1 1; map a: [[1,0]]; map b: [[0,1]]; map c: [[1,1]]; }",
                       b2_star(), f);
    CHECK(m3 == m);

    Field q = Field::rationals();
    Rep mq = parse_rep("rep { dim: 1 1; map a: [[2/3]]; }", a2(), q);
    CHECK(mq.maps[0].get(0, 0).str() == "2/3");
    std::string tq = print_rep(mq);
    CHECK(parse_rep(tq, a2(), q) == mq);

    CHECK_THROWS_AS(parse_rep("rep { dim: 1; map a: [[1]]; }", a2(), f), ParseError);
    CHECK_THROWS_AS(parse_rep("rep { dim: 1 1; map z: [[1]]; }", a2(), f), ParseError);
    CHECK_THROWS_AS(parse_rep("rep { dim: 1 1; map a: [[1,2]]; }", a2(), f), ParseError);
}

TEST_CASE("combined input files") {
    Field f = Field::gfp(5);
    std::string text =
        "# a quiver with a representation\n"
        "quiver B2 {\n  vertices: 1 2 3 4;\n  arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4;\n}\n"
        "rep { dim: 2 1 1 1; map a: [[1,0]]; map b: [[0,1]]; map c: [[1,1]]; }\n";
    InputFile in = parse_input(text, f);
    CHECK(in.quiver.num_vertices() == 4);
    REQUIRE(in.representation.has_value());
    CHECK(in.representation->dim == qv::DimVector{2, 1, 1, 1});

    InputFile bare = parse_input("quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }", f);
    CHECK(!bare.representation.has_value());
}

TEST_CASE("c_top equals dim iff the radical vanishes") {
    Field f = Field::gfp(3);
    Rep m = b2_m(f);
    CHECK(c_top(m) != c_total(m));
    Rep ss = direct_sum(Rep::simple(a2(), f, 0), Rep::simple(a2(), f, 1));
    CHECK(c_top(ss) == c_total(ss));
    CHECK(radical(ss).sub.total_dim() == 0);
}
