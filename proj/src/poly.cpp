#include "kothe/poly.hpp"

#include <algorithm>
#include <sstream>

namespace kothe::la {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_coeffs(const Field& f, std::vector<Fel> coeffs) {
    Poly p(f);
    for (const Fel& c : coeffs) KOTHE_CHECK(c.field() == f, "field mismatch in Poly");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::from_ints(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<Fel> c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.push_back(Fel::from_int(f, v));
    return from_coeffs(f, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
    if (f_ != o.f_ || c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].str();
        if (i >= 1) os << "*x";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Poly add(const Poly& a, const Poly& b) {
    KOTHE_CHECK(a.field() == b.field(), "field mismatch");
    std::vector<Fel> c;
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
    KOTHE_CHECK(a.field() == b.field(), "field mismatch");
    std::vector<Fel> c;
    std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) c.push_back(a.coeff(i) - b.coeff(i));
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
    KOTHE_CHECK(a.field() == b.field(), "field mismatch");
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    std::vector<Fel> c(a.coeffs().size() + b.coeffs().size() - 1, Fel::zero(a.field()));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = c[i + j] + a.coeff(i) * b.coeff(j);
    }
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly scale(const Fel& s, const Poly& a) {
    std::vector<Fel> c;
    for (const Fel& x : a.coeffs()) c.push_back(s * x);
    return Poly::from_coeffs(a.field(), std::move(c));
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a.lc().inv(), a);
}

Poly derivative(const Poly& a) {
    std::vector<Fel> c;
    for (std::size_t i = 1; i < a.coeffs().size(); ++i)
        c.push_back(Fel::from_int(a.field(), static_cast<long long>(i)) * a.coeff(i));
    return Poly::from_coeffs(a.field(), std::move(c));
}

Fel eval(const Poly& a, const Fel& x) {
    Fel acc = Fel::zero(a.field());
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = acc * x + a.coeff(i);
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    KOTHE_CHECK(!b.is_zero(), "division by zero polynomial");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly::zero(f), a};
    std::vector<Fel> rem(a.coeffs());
    std::vector<Fel> quo(a.degree() - b.degree() + 1, Fel::zero(f));
    Fel lcinv = b.lc().inv();
    for (long i = a.degree(); i >= b.degree(); --i) {
        Fel c = rem[i] * lcinv;
        if (c.is_zero()) continue;
        quo[i - b.degree()] = c;
        for (long j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] = rem[i - b.degree() + j] - c * b.coeff(j);
    }
    return {Poly::from_coeffs(f, std::move(quo)), Poly::from_coeffs(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : monic(x);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(f), s1 = Poly::zero(f);
    Poly t0 = Poly::zero(f), t1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly ns = sub(s0, mul(q, s1));
        s0 = s1;
        s1 = ns;
        Poly nt = sub(t0, mul(q, t1));
        t0 = t1;
        t1 = nt;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Fel c = r0.lc().inv();
    return {scale(c, r0), scale(c, s0), scale(c, t0)};
}

Poly pow_mod(const Poly& a, const mpz_class& e, const Poly& m) {
    Poly acc = divmod(Poly::one(a.field()), m).second;
    Poly base = divmod(a, m).second;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = divmod(mul(acc, base), m).second;
        base = divmod(mul(base, base), m).second;
        k >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// factorization over GF(p)

namespace {

Poly random_poly_below(Rng& rng, const Field& f, long deg_bound) {
    std::vector<Fel> c;
    for (long i = 0; i < deg_bound; ++i) c.push_back(rng.fel(f));
    return Poly::from_coeffs(f, std::move(c));
}

// p-th root of f when f' = 0, i.e. f = g(x^p); over the prime field the
// coefficients are their own p-th roots.
Poly pth_root(const Poly& f) {
    uint32_t p = f.field().p();
    std::vector<Fel> c;
    for (std::size_t i = 0; i * p < f.coeffs().size() || i == 0; ++i) c.push_back(f.coeff(i * p));
    return Poly::from_coeffs(f.field(), std::move(c));
}

void squarefree_gf(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() <= 0) return;
    uint32_t p = f.field().p();
    Poly d = derivative(f);
    if (d.is_zero()) {
        squarefree_gf(pth_root(f), mult * static_cast<int>(p), out);
        return;
    }
    Poly g = gcd(f, d);
    Poly w = divmod(f, g).first;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, g);
        Poly fac = divmod(w, y).first;
        if (fac.degree() > 0) out.push_back({monic(fac), mult * i});
        w = y;
        g = divmod(g, y).first;
        ++i;
    }
    if (g.degree() > 0) squarefree_gf(g, mult, out);
}

// equal-degree splitting (Cantor-Zassenhaus); all irreducible factors of the
// monic squarefree g have degree d
void edf_gf(const Poly& g, long d, Rng& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Field& f = g.field();
    uint32_t p = f.p();
    for (;;) {
        Poly r = random_poly_below(rng, f, g.degree());
        if (r.degree() < 1) continue;
        Poly h(f);
        if (p == 2) {
            Poly t = divmod(r, g).second;
            Poly acc = t;
            for (long i = 1; i < d; ++i) {
                t = divmod(mul(t, t), g).second;
                acc = add(acc, t);
            }
            h = acc;
        } else {
            mpz_class e;
            mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            h = sub(pow_mod(r, e, g), Poly::one(f));
        }
        Poly w = gcd(h, g);
        if (w.degree() > 0 && w.degree() < g.degree()) {
            edf_gf(w, d, rng, out);
            edf_gf(divmod(g, w).first, d, rng, out);
            return;
        }
    }
}

std::vector<PolyFactor> factor_gf(const Poly& f, Rng& rng) {
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_gf(monic(f), 1, sqf);
    std::vector<PolyFactor> out;
    const Field& fld = f.field();
    uint32_t p = fld.p();
    for (auto& [g0, mult] : sqf) {
        Poly g = g0;
        Poly h = Poly::x(fld);  // becomes x^(p^d) mod g incrementally
        for (long d = 1; g.degree() > 0 && d <= g.degree(); ++d) {
            h = pow_mod(h, mpz_class(static_cast<unsigned long>(p)), g);
            Poly gd = gcd(sub(h, Poly::x(fld)), g);
            if (gd.degree() > 0) {
                std::vector<Poly> irr;
                edf_gf(gd, d, rng, irr);
                for (Poly& q : irr) out.push_back({q, mult});
                g = divmod(g, gd).first;
                if (g.degree() > 0) h = divmod(h, g).second;
            }
        }
        if (g.degree() > 0) out.push_back({g, mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.f.degree() != b.f.degree()) return a.f.degree() < b.f.degree();
        for (long i = a.f.degree(); i >= 0; --i) {
            uint32_t x = a.f.coeff(i).u(), y = b.f.coeff(i).u();
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------
// factorization over QQ (Zassenhaus)

using ZPoly = std::vector<mpz_class>;  // low-degree first, trimmed

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long zp_deg(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (i < a.size() ? a[i] : mpz_class(0)) - (i < b.size() ? b[i] : mpz_class(0));
    zp_trim(c);
    return c;
}

void zp_mod_center(ZPoly& a, const mpz_class& m) {
    mpz_class half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());  // in [0, m)
        if (c > half) c -= m;
    }
    zp_trim(a);
}

mpz_class zp_content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zp_primitive(ZPoly a) {
    mpz_class c = zp_content(a);
    if (c == 0) return a;
    if (a.back() < 0) c = -c;
    for (auto& x : a) x /= c;
    return a;
}

Poly zp_to_poly(const ZPoly& a, const Field& f) {
    std::vector<Fel> c;
    for (const auto& x : a) c.push_back(Fel::from_rat(f, Rat(x)));
    return Poly::from_coeffs(f, std::move(c));
}

Poly zp_to_poly_modp(const ZPoly& a, const Field& fp) {
    std::vector<Fel> c;
    for (const auto& x : a) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), fp.p());
        c.push_back(Fel::from_gf(fp, static_cast<uint32_t>(r.get_ui())));
    }
    return Poly::from_coeffs(fp, std::move(c));
}

// clear denominators of a QQ polynomial
ZPoly poly_to_zp(const Poly& a) {
    mpz_class den = 1;
    for (const Fel& c : a.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.q().get_den().get_mpz_t());
    ZPoly z;
    for (const Fel& c : a.coeffs()) {
        Rat r = c.q() * Rat(den);
        z.push_back(r.get_num());
    }
    zp_trim(z);
    return z;
}

ZPoly poly_gf_lift(const Poly& a) {
    ZPoly z;
    for (const Fel& c : a.coeffs()) z.push_back(mpz_class(c.u()));
    zp_trim(z);
    return z;
}

// One linear Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod p),
// g monic, to the same congruence mod m*p. Degrees of g and h are preserved.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, const Poly& s, const Poly& t,
                 const mpz_class& m, uint32_t p, const Field& fp) {
    ZPoly e = zp_sub(f, zp_mul(g, h));
    for (auto& c : e) {
        KOTHE_CHECK(mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()), "Hensel invariant broken");
        c /= m;
    }
    Poly ep = zp_to_poly_modp(e, fp);
    Poly gp = zp_to_poly_modp(g, fp), hp = zp_to_poly_modp(h, fp);
    auto [q, a] = divmod(mul(t, ep), gp);
    Poly b = add(mul(s, ep), mul(q, hp));
    KOTHE_CHECK(a.degree() < zp_deg(g), "Hensel degree bound (a)");
    // b may reach deg(h): it can correct the leading coefficient of h
    KOTHE_CHECK(b.degree() <= zp_deg(h) || b.is_zero(), "Hensel degree bound (b)");
    ZPoly az = poly_gf_lift(a), bz = poly_gf_lift(b);
    mpz_class mp = m * p;
    g.resize(std::max(g.size(), az.size()), mpz_class(0));
    for (std::size_t i = 0; i < az.size(); ++i) g[i] += m * az[i];
    h.resize(std::max(h.size(), bz.size()), mpz_class(0));
    for (std::size_t i = 0; i < bz.size(); ++i) h[i] += m * bz[i];
    zp_mod_center(g, mp);
    zp_mod_center(h, mp);
}

// Lift monic modular factors of f to factors mod p^K along a factor tree;
// appends monic lifted factors to out.
void hensel_tree(const ZPoly& f, const std::vector<Poly>& fac, uint32_t p, int K,
                 const Field& fp, std::vector<ZPoly>& out) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(K));
    if (fac.size() == 1) {
        mpz_class lc;
        mpz_fdiv_r(lc.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
        mpz_class lcinv;
        KOTHE_CHECK(mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t()) != 0,
                    "leading coefficient not a unit mod p^K");
        ZPoly g = f;
        for (auto& c : g) c *= lcinv;
        zp_mod_center(g, pk);
        KOTHE_CHECK(!g.empty() && g.back() == 1, "monic recovery failed");
        out.push_back(g);
        return;
    }
    std::size_t half = fac.size() / 2;
    std::vector<Poly> lfac(fac.begin(), fac.begin() + half), rfac(fac.begin() + half, fac.end());
    Poly gp = Poly::one(fp), hp = Poly::one(fp);
    for (const Poly& q : lfac) gp = mul(gp, q);
    for (const Poly& q : rfac) hp = mul(hp, q);
    hp = scale(zp_to_poly_modp({f.back()}, fp).coeff(0), hp);
    ExtGcd eg = ext_gcd(gp, hp);
    KOTHE_CHECK(eg.g.degree() == 0 && !eg.g.is_zero(), "modular factors not coprime");
    Poly s = eg.s, t = eg.t;  // s*gp + t*hp = 1
    ZPoly g = poly_gf_lift(gp), h = poly_gf_lift(hp);
    zp_mod_center(g, mpz_class(static_cast<unsigned long>(p)));
    zp_mod_center(h, mpz_class(static_cast<unsigned long>(p)));
    KOTHE_CHECK(!g.empty() && g.back() == 1, "left product must be monic");
    mpz_class m(static_cast<unsigned long>(p));
    while (m < pk) {
        hensel_step(f, g, h, s, t, m, p, fp);
        m *= p;
    }
    hensel_tree(g, lfac, p, K, fp, out);
    hensel_tree(h, rfac, p, K, fp, out);
}

std::vector<PolyFactor> factor_q(const Poly& f0, Rng& rng) {
    const Field& fq = f0.field();
    std::vector<PolyFactor> out;
    Poly f = monic(f0);
    // squarefree decomposition (char 0)
    std::vector<std::pair<Poly, int>> sqf;
    {
        Poly g = gcd(f, derivative(f));
        Poly w = divmod(f, g).first;
        int i = 1;
        while (w.degree() > 0) {
            Poly y = gcd(w, g);
            Poly fac = divmod(w, y).first;
            if (fac.degree() > 0) sqf.push_back({monic(fac), i});
            w = y;
            g = divmod(g, y).first;
            ++i;
        }
    }
    for (auto& [sf, mult] : sqf) {
        ZPoly F = zp_primitive(poly_to_zp(sf));
        long n = zp_deg(F);
        if (n == 1) {
            out.push_back({monic(zp_to_poly(F, fq)), mult});
            continue;
        }
        uint32_t p = 0;
        std::vector<Poly> modular;
        for (uint32_t cand = 3;; cand += 2) {
            if (!gf::is_prime(cand)) continue;
            if (mpz_divisible_ui_p(F.back().get_mpz_t(), cand)) continue;
            Field fp = Field::gfp(cand);
            Poly fmodp = zp_to_poly_modp(F, fp);
            if (fmodp.degree() != n) continue;
            if (gcd(fmodp, derivative(fmodp)).degree() != 0) continue;
            auto facs = factor_gf(monic(fmodp), rng);
            modular.clear();
            for (auto& pf : facs) modular.push_back(pf.f);
            p = cand;
            break;
        }
        Field fp = Field::gfp(p);
        if (modular.size() == 1) {
            out.push_back({monic(zp_to_poly(F, fq)), mult});
            continue;
        }
        // coefficient bound for any factor: 2^(n+1) * (||F||_2 + 1) * |lc|
        mpz_class norm2 = 0;
        for (const auto& c : F) norm2 += c * c;
        mpz_class bound;
        mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
        bound += 1;
        bound <<= static_cast<unsigned long>(n + 1);
        bound *= abs(F.back());
        int K = 1;
        mpz_class pk(static_cast<unsigned long>(p));
        while (pk <= 2 * bound) {
            pk *= p;
            ++K;
        }
        std::vector<ZPoly> lifted;
        hensel_tree(F, modular, p, K, fp, lifted);
        mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(K));

        ZPoly rem = F;
        std::vector<bool> used(lifted.size(), false);
        std::size_t remaining = lifted.size();
        for (std::size_t take = 1; remaining > 0 && 2 * take <= remaining + 1; ++take) {
            bool found = true;
            while (found && 2 * take <= remaining + 1) {
                found = false;
                std::vector<std::size_t> avail;
                for (std::size_t i = 0; i < lifted.size(); ++i)
                    if (!used[i]) avail.push_back(i);
                if (take > avail.size()) break;
                std::vector<std::size_t> idx(take);
                for (std::size_t i = 0; i < take; ++i) idx[i] = i;
                for (;;) {
                    ZPoly candz{rem.back()};
                    for (std::size_t i : idx) candz = zp_mul(candz, lifted[avail[i]]);
                    zp_mod_center(candz, pk);
                    candz = zp_primitive(candz);
                    Poly candq = zp_to_poly(candz, fq);
                    auto [quo, r] = divmod(zp_to_poly(rem, fq), candq);
                    if (r.is_zero()) {
                        out.push_back({monic(candq), mult});
                        for (std::size_t i : idx) used[avail[i]] = true;
                        remaining -= take;
                        rem = zp_primitive(poly_to_zp(quo));
                        found = true;
                        break;
                    }
                    std::size_t k = take;
                    while (k > 0 && idx[k - 1] == avail.size() - take + (k - 1)) --k;
                    if (k == 0) break;
                    ++idx[k - 1];
                    for (std::size_t j = k; j < take; ++j) idx[j] = idx[j - 1] + 1;
                }
            }
        }
        if (zp_deg(rem) > 0) out.push_back({monic(zp_to_poly(rem, fq)), mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.f.degree() != b.f.degree()) return a.f.degree() < b.f.degree();
        for (long i = a.f.degree(); i >= 0; --i) {
            int c = cmp(a.f.coeff(i).q(), b.f.coeff(i).q());
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f, Rng& rng) {
    KOTHE_CHECK(f.degree() >= 1, "factor() needs degree >= 1");
    auto out = f.field().is_gf() ? factor_gf(f, rng) : factor_q(f, rng);
    Poly prod = Poly::one(f.field());
    for (const auto& pf : out)
        for (int i = 0; i < pf.mult; ++i) prod = mul(prod, pf.f);
    KOTHE_CHECK(prod == monic(f), "factorization certification failed");
    return out;
}

bool is_irreducible(const Poly& f, Rng& rng) {
    if (f.degree() == 1) return true;
    auto fs = factor(f, rng);
    return fs.size() == 1 && fs[0].mult == 1;
}

}  // namespace kothe::la
