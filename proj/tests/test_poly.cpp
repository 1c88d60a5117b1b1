#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kothe/poly.hpp"

using namespace kothe::la;

namespace {

Poly random_monic(Rng& rng, const Field& f, long deg) {
    std::vector<Fel> c;
    for (long i = 0; i < deg; ++i) c.push_back(rng.fel(f));
    c.push_back(Fel::one(f));
    return Poly::from_coeffs(f, std::move(c));
}

}  // namespace

TEST_CASE("divmod and gcd basics over GF(7)") {
    Field f = Field::gfp(7);
    Poly a = Poly::from_ints(f, {-1, 0, 1});  // x^2 - 1
    Poly b = Poly::from_ints(f, {1, 1});      // x + 1
    auto [q, r] = divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == Poly::from_ints(f, {-1, 1}));
    CHECK(gcd(a, b) == monic(b));

    ExtGcd eg = ext_gcd(a, Poly::from_ints(f, {1, 0, 1}));  // gcd(x^2-1, x^2+1) = 1
    CHECK(eg.g == Poly::one(f));
    CHECK(add(mul(eg.s, a), mul(eg.t, Poly::from_ints(f, {1, 0, 1}))) == Poly::one(f));
}

TEST_CASE("factor over GF(p): known splits") {
    Rng rng(1);
    Field f2 = Field::gfp(2);
    // x^2 + x = x(x+1)
    auto fs = factor(Poly::from_ints(f2, {0, 1, 1}), rng);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].f.degree() == 1);
    CHECK(fs[1].f.degree() == 1);

    // x^2 + x + 1 irreducible over GF(2)
    CHECK(is_irreducible(Poly::from_ints(f2, {1, 1, 1}), rng));

    // x^4 + x^2 = x^2 (x+1)^2 over GF(2)
    auto fs2 = factor(Poly::from_ints(f2, {0, 0, 1, 0, 1}), rng);
    REQUIRE(fs2.size() == 2);
    CHECK(fs2[0].mult == 2);
    CHECK(fs2[1].mult == 2);

    Field f5 = Field::gfp(5);
    auto fs3 = factor(Poly::from_ints(f5, {-1, 0, 1}), rng);  // x^2 - 1
    CHECK(fs3.size() == 2);
    // x^2 - 2 irreducible over GF(5) (2 is not a square mod 5)
    CHECK(is_irreducible(Poly::from_ints(f5, {-2, 0, 1}), rng));
}

TEST_CASE("factor over GF(p): random monic products recombine") {
    Rng rng(77);
    for (uint32_t p : {2u, 3u, 13u}) {
        Field f = Field::gfp(p);
        for (int it = 0; it < 15; ++it) {
            Poly a = random_monic(rng, f, 1 + static_cast<long>(rng.below(4)));
            Poly b = random_monic(rng, f, 1 + static_cast<long>(rng.below(4)));
            Poly prod = mul(a, b);
            auto fs = factor(prod, rng);  // certification happens inside
            long degsum = 0;
            for (auto& pf : fs) degsum += pf.f.degree() * pf.mult;
            CHECK(degsum == prod.degree());
        }
    }
}

TEST_CASE("factor over QQ") {
    Rng rng(3);
    Field q = Field::rationals();

    auto fs = factor(Poly::from_ints(q, {-1, 0, 1}), rng);  // x^2 - 1
    REQUIRE(fs.size() == 2);

    CHECK(is_irreducible(Poly::from_ints(q, {1, 0, 1}), rng));  // x^2 + 1

    auto fs2 = factor(Poly::from_ints(q, {0, -1, 1}), rng);  // x(x-1)
    REQUIRE(fs2.size() == 2);

    // x^4 + x^3 + x^2 + x + 1 irreducible
    CHECK(is_irreducible(Poly::from_ints(q, {1, 1, 1, 1, 1}), rng));

    // (x^2+1)(x^2-2)(x-3)^2
    Poly a = Poly::from_ints(q, {1, 0, 1});
    Poly b = Poly::from_ints(q, {-2, 0, 1});
    Poly c = Poly::from_ints(q, {-3, 1});
    Poly prod = mul(mul(a, b), mul(c, c));
    auto fs3 = factor(prod, rng);
    REQUIRE(fs3.size() == 3);
    int found_sq = 0;
    for (auto& pf : fs3)
        if (pf.mult == 2) {
            ++found_sq;
            CHECK(pf.f == c);
        }
    CHECK(found_sq == 1);

    // rational coefficients: (2/3)x^2 - 2/3 -> (x-1)(x+1)
    Poly nm =
        Poly::from_coeffs(q, {Fel::parse(q, "-2/3"), Fel::zero(q), Fel::parse(q, "2/3")});
    auto fs4 = factor(nm, rng);
    CHECK(fs4.size() == 2);
}

TEST_CASE("factor over QQ: random integer products recombine") {
    Rng rng(11);
    Field q = Field::rationals();
    for (int it = 0; it < 12; ++it) {
        Poly a = random_monic(rng, q, 1 + static_cast<long>(rng.below(3)));
        Poly b = random_monic(rng, q, 1 + static_cast<long>(rng.below(3)));
        Poly prod = mul(a, b);
        auto fs = factor(prod, rng);
        long degsum = 0;
        for (auto& pf : fs) degsum += pf.f.degree() * pf.mult;
        CHECK(degsum == prod.degree());
    }
}

TEST_CASE("pow_mod matches repeated multiplication") {
    Field f = Field::gfp(5);
    Poly m = Poly::from_ints(f, {1, 1, 1});
    Poly x = Poly::x(f);
    Poly acc = Poly::one(f);
    for (int e = 0; e <= 10; ++e) {
        CHECK(pow_mod(x, mpz_class(e), m) == divmod(acc, m).second);
        acc = mul(acc, x);
    }
}
