#include "kothe/field.hpp"

namespace kothe::la {

namespace gf {

uint32_t inv(uint32_t a, uint32_t p) {
    KOTHE_CHECK(a % p != 0, "division by zero in GF(" + std::to_string(p) + ")");
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1;
    int64_t r = p, newr = a % p;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint64_t base = a % p, acc = 1 % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

static uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

static uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = mulmod64(acc, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return acc;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Miller-Rabin with bases 2,3,5,7 is exact below 3,215,031,751;
    // moduli here are < 2^31.
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace gf

Field Field::parse(const std::string& s) {
    if (s == "QQ" || s == "Q") return rationals();
    if (s.size() > 4 && (s.rfind("GF(", 0) == 0) && s.back() == ')') {
        std::string num = s.substr(3, s.size() - 4);
        try {
            unsigned long p = std::stoul(num);
            KOTHE_CHECK(p <= 0x7fffffffull, "GF modulus too large (max 2^31-1): " + s);
            return gfp(static_cast<uint32_t>(p));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
            throw Error("GF modulus too large (max 2^31-1): " + s);
        }
    }
    if (s.size() > 2 && s.rfind("F_", 0) == 0) return parse("GF(" + s.substr(2) + ")");
    throw Error("cannot parse field: '" + s + "' (expected GF(p) or QQ)");
}

Fel Fel::from_rat(const Field& f, const Rat& r) {
    Fel x(f);
    if (f.is_q()) {
        x.q_ = r;
        x.q_.canonicalize();
        return x;
    }
    // reduce n/d mod p; denominator must be invertible
    uint32_t p = f.p();
    mpz_class num = r.get_num() % p, den = r.get_den() % p;
    if (num < 0) num += p;
    uint32_t n32 = static_cast<uint32_t>(num.get_ui());
    uint32_t d32 = static_cast<uint32_t>(den.get_ui());
    x.u_ = gf::mul(n32, gf::inv(d32, p), p);
    return x;
}

Fel Fel::parse(const Field& f, const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r{mpz_class(s)};
            return from_rat(f, r);
        }
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        KOTHE_CHECK(den != 0, "zero denominator in scalar '" + s + "'");
        Rat r(num, den);
        r.canonicalize();
        return from_rat(f, r);
    } catch (const std::invalid_argument&) {
        throw Error("cannot parse scalar '" + s + "'");
    }
}

Fel Fel::operator+(const Fel& o) const {
    KOTHE_CHECK(f_ == o.f_, "field mismatch");
    Fel x(f_);
    if (f_.is_gf())
        x.u_ = gf::add(u_, o.u_, f_.p());
    else
        x.q_ = q_ + o.q_;
    return x;
}

Fel Fel::operator-(const Fel& o) const {
    KOTHE_CHECK(f_ == o.f_, "field mismatch");
    Fel x(f_);
    if (f_.is_gf())
        x.u_ = gf::sub(u_, o.u_, f_.p());
    else
        x.q_ = q_ - o.q_;
    return x;
}

Fel Fel::operator*(const Fel& o) const {
    KOTHE_CHECK(f_ == o.f_, "field mismatch");
    Fel x(f_);
    if (f_.is_gf())
        x.u_ = gf::mul(u_, o.u_, f_.p());
    else
        x.q_ = q_ * o.q_;
    return x;
}

Fel Fel::operator-() const {
    Fel x(f_);
    if (f_.is_gf())
        x.u_ = gf::neg(u_, f_.p());
    else
        x.q_ = -q_;
    return x;
}

Fel Fel::inv() const {
    Fel x(f_);
    if (f_.is_gf()) {
        x.u_ = gf::inv(u_, f_.p());
    } else {
        KOTHE_CHECK(q_ != 0, "division by zero in QQ");
        x.q_ = 1 / q_;
    }
    return x;
}

std::string Fel::str() const {
    if (f_.is_gf()) return std::to_string(u_);
    return q_.get_str();
}

}  // namespace kothe::la
