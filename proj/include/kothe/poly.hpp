// Dense univariate polynomials over a Field, plus the factorization routines
// the idempotent machinery needs: squarefree/DDF/EDF over GF(p) and
// Zassenhaus (mod-p factor, Hensel lift, subset recombination) over QQ.
// Coefficients are stored low-degree first with no trailing zeros.

#pragma once

#include <vector>

#include "kothe/field.hpp"

namespace kothe::la {

class Poly {
public:
    explicit Poly(const Field& f) : f_(f) {}
    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return from_coeffs(f, {Fel::one(f)}); }
    static Poly x(const Field& f) { return from_coeffs(f, {Fel::zero(f), Fel::one(f)}); }
    static Poly from_coeffs(const Field& f, std::vector<Fel> coeffs);
    static Poly from_ints(const Field& f, const std::vector<long long>& coeffs);

    const Field& field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Fel coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fel::zero(f_); }
    Fel lc() const {
        KOTHE_CHECK(!c_.empty(), "leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Fel>& coeffs() const { return c_; }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    std::string str() const;

private:
    void trim();
    Field f_;
    std::vector<Fel> c_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Fel& c, const Poly& a);
Poly monic(const Poly& a);
Poly derivative(const Poly& a);
Fel eval(const Poly& a, const Fel& x);
// quotient and remainder; divisor must be nonzero
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic
// g = gcd(a,b) together with s,t such that s*a + t*b = g
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
// a^e mod m, with an arbitrary-precision exponent
Poly pow_mod(const Poly& a, const mpz_class& e, const Poly& m);

struct PolyFactor {
    Poly f;    // monic irreducible
    int mult;  // multiplicity
};

// Complete factorization into monic irreducibles (the scalar content is
// dropped). Works over GF(p) and over QQ. Las Vegas over GF(p); the result is
// certified by re-multiplication. Deterministic given the rng state.
std::vector<PolyFactor> factor(const Poly& f, Rng& rng);
bool is_irreducible(const Poly& f, Rng& rng);

}  // namespace kothe::la
