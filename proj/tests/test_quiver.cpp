#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kothe/quiver.hpp"

using namespace kothe::qv;

namespace {

const char* kB2Source = R"(# the 4-vertex star with arrows out of vertex 1
quiver B2 {
  vertices: 1 2 3 4;
  arrows: a: 1 -> 2; b: 1 -> 3; c: 1 -> 4;
}
)";

Quiver linear_a(int n) {
    std::vector<std::string> verts;
    std::vector<std::array<std::string, 3>> arrows;
    for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i)
        arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
    return Quiver::make("A" + std::to_string(n), verts, arrows);
}

}  // namespace

TEST_CASE("parse minimal A2") {
    Quiver q = parse_quiver("quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }");
    CHECK(q.num_vertices() == 2);
    CHECK(q.num_arrows() == 1);
    CHECK(q.arrows()[0].src == 0);
    CHECK(q.arrows()[0].dst == 1);
}

TEST_CASE("parse the 4-star quiver") {
    Quiver q = parse_quiver(kB2Source);
    CHECK(q.num_vertices() == 4);
    CHECK(q.num_arrows() == 3);
    for (const Arrow& a : q.arrows()) CHECK(a.src == 0);
    CHECK(q.is_source(0));
    CHECK(q.is_sink(1));
}

TEST_CASE("parse errors carry position") {
    CHECK_THROWS_AS(parse_quiver("quiver X { vertices: 1; arrows: a: 1 -> 9; }"),
                    kothe::ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver X { vertices: 1 1; arrows: }"), kothe::ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver X { vertices: 1 2; arrows: a: 1 -> 2; a: 2 -> 1; }"),
                    kothe::ParseError);
    CHECK_THROWS_AS(parse_quiver("quiver X vertices"), kothe::ParseError);
    try {
        parse_quiver("quiver X {\n  vertices: 1;\n  arrows: a: 1 -> 9;\n}");
        CHECK(false);
    } catch (const kothe::ParseError& e) {
        CHECK(e.line() == 3);
    }
    // loops and parallel arrows are accepted syntactically
    CHECK_NOTHROW(parse_quiver("quiver L { vertices: 1; arrows: a: 1 -> 1; }"));
    CHECK_NOTHROW(
        parse_quiver("quiver K { vertices: 1 2; arrows: a: 1 -> 2; b: 1 -> 2; }"));
}

TEST_CASE("print/parse round-trip") {
    for (const char* src :
         {kB2Source, "quiver A2 { vertices: 1 2; arrows: a: 1 -> 2; }",
          "quiver One { vertices: v; arrows: }"}) {
        Quiver q = parse_quiver(src);
        CHECK(parse_quiver(q.print()) == q);
    }
}

TEST_CASE("classify: linear quivers are A(n)") {
    for (int n = 1; n <= 8; ++n) {
        DynkinClass d = classify_dynkin(linear_a(n));
        CHECK(d.type == DynkinClass::Type::A);
        CHECK(d.n == n);
    }
}

TEST_CASE("classify: the star quiver is D4") {
    DynkinClass d = classify_dynkin(parse_quiver(kB2Source));
    REQUIRE(d.type == DynkinClass::Type::D);
    CHECK(d.n == 4);
    // center is Bourbaki node 2 = n-2
    CHECK(d.node_of_vertex[0] == 2);
}

TEST_CASE("classify: non-Dynkin shapes") {
    CHECK(!classify_dynkin(parse_quiver("quiver L { vertices: 1; arrows: a: 1 -> 1; }"))
               .is_dynkin());
    CHECK(!classify_dynkin(
               parse_quiver("quiver K { vertices: 1 2; arrows: a: 1 -> 2; b: 1 -> 2; }"))
               .is_dynkin());
    CHECK(!classify_dynkin(parse_quiver("quiver C { vertices: 1 2 3; arrows: a: 1 -> 2; "
                                        "b: 2 -> 3; c: 3 -> 1; }"))
               .is_dynkin());
    CHECK(!classify_dynkin(parse_quiver("quiver Dis { vertices: 1 2; arrows: }")).is_dynkin());
    // star with four branches (D4 affine shape)
    CHECK(!classify_dynkin(parse_quiver("quiver X { vertices: 0 1 2 3 4; arrows: a: 1 -> 0; "
                                        "b: 2 -> 0; c: 3 -> 0; d: 4 -> 0; }"))
               .is_dynkin());
}

TEST_CASE("classify E6/E7/E8 and D5") {
    // E6: chain 1-3-4-5-6 with 2 on 4
    Quiver e6 = parse_quiver(
        "quiver E6 { vertices: 1 2 3 4 5 6; arrows: a: 1 -> 3; b: 3 -> 4; c: 2 -> 4; "
        "d: 4 -> 5; e: 5 -> 6; }");
    DynkinClass d = classify_dynkin(e6);
    CHECK(d.type == DynkinClass::Type::E);
    CHECK(d.n == 6);

    Quiver e7 = parse_quiver(
        "quiver E7 { vertices: 1 2 3 4 5 6 7; arrows: a: 1 -> 3; b: 3 -> 4; c: 2 -> 4; "
        "d: 4 -> 5; e: 5 -> 6; f: 6 -> 7; }");
    CHECK(classify_dynkin(e7).str() == "E7");

    Quiver e8 = parse_quiver(
        "quiver E8 { vertices: 1 2 3 4 5 6 7 8; arrows: a: 1 -> 3; b: 3 -> 4; c: 2 -> 4; "
        "d: 4 -> 5; e: 5 -> 6; f: 6 -> 7; g: 7 -> 8; }");
    CHECK(classify_dynkin(e8).str() == "E8");

    Quiver d5 = parse_quiver(
        "quiver D5 { vertices: 1 2 3 4 5; arrows: a: 1 -> 2; b: 2 -> 3; c: 4 -> 3; "
        "d: 5 -> 3; }");
    CHECK(classify_dynkin(d5).str() == "D5");
}

TEST_CASE("classification is orientation-independent") {
    Quiver q = parse_quiver(kB2Source);
    CHECK(classify_dynkin(q.reversed()).str() == classify_dynkin(q).str());
    Quiver e6 = parse_quiver(
        "quiver E6 { vertices: 1 2 3 4 5 6; arrows: a: 1 -> 3; b: 3 -> 4; c: 2 -> 4; "
        "d: 4 -> 5; e: 5 -> 6; }");
    CHECK(classify_dynkin(e6.reversed()).str() == "E6");
}

TEST_CASE("positive roots of A2") {
    auto roots = positive_roots(linear_a(2));
    REQUIRE(roots.size() == 3);
    CHECK(std::find(roots.begin(), roots.end(), DimVector{1, 0}) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), DimVector{0, 1}) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), DimVector{1, 1}) != roots.end());
}

TEST_CASE("positive roots of the D4 star contain (2,1,1,1)") {
    Quiver q = parse_quiver(kB2Source);
    auto roots = positive_roots(q);
    CHECK(roots.size() == 12);
    CHECK(std::find(roots.begin(), roots.end(), DimVector{2, 1, 1, 1}) != roots.end());
    // simple roots appear exactly once each
    for (std::size_t i = 0; i < 4; ++i) {
        DimVector e(4, 0);
        e[i] = 1;
        CHECK(std::count(roots.begin(), roots.end(), e) == 1);
    }
    // every root satisfies the Tits form
    for (const auto& d : roots) CHECK(tits_form(q, d) == 1);
}

TEST_CASE("root counts match closed forms") {
    for (int n = 1; n <= 8; ++n)
        CHECK(positive_roots(linear_a(n)).size() == static_cast<std::size_t>(n * (n + 1) / 2));
    Quiver e6 = parse_quiver(
        "quiver E6 { vertices: 1 2 3 4 5 6; arrows: a: 1 -> 3; b: 3 -> 4; c: 2 -> 4; "
        "d: 4 -> 5; e: 5 -> 6; }");
    CHECK(positive_roots(e6).size() == 36);
    Quiver d5 = parse_quiver(
        "quiver D5 { vertices: 1 2 3 4 5; arrows: a: 1 -> 2; b: 2 -> 3; c: 4 -> 3; "
        "d: 5 -> 3; }");
    CHECK(positive_roots(d5).size() == 20);
}

TEST_CASE("oriented cycle detection") {
    CHECK(parse_quiver("quiver C { vertices: 1 2; arrows: a: 1 -> 2; b: 2 -> 1; }")
              .has_oriented_cycle());
    CHECK(parse_quiver("quiver L { vertices: 1; arrows: a: 1 -> 1; }").has_oriented_cycle());
    CHECK(!parse_quiver(kB2Source).has_oriented_cycle());
}
