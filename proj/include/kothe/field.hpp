// Exact base fields: GF(p) for prime p <= 2^31-1, and the rationals.
//
// Every scalar in this project is either a canonical residue in [0,p) or an
// mpq_class in lowest terms with positive denominator. No floating point.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kothe {

using Rat = mpq_class;

// Project-wide error type. Parse errors carry line/column separately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int col)
        : Error(what + " (line " + std::to_string(line) + ", col " + std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

#define KOTHE_CHECK(cond, msg)                       \
    do {                                             \
        if (!(cond)) throw ::kothe::Error(msg);      \
    } while (0)

namespace la {

// Modular scalar arithmetic on canonical residues. p is a prime < 2^31.
namespace gf {

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;  // < 2p <= 2^32-2, no overflow
    return s >= p ? s - p : s;
}

inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

uint32_t inv(uint32_t a, uint32_t p);
uint32_t pow(uint32_t a, uint64_t e, uint32_t p);

// Reduce an arbitrary signed integer into [0,p).
inline uint32_t from_int(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

bool is_prime(uint64_t n);

}  // namespace gf

class Field {
public:
    enum class Kind { gf, rationals };

    static Field gfp(uint32_t p) {
        KOTHE_CHECK(p >= 2 && gf::is_prime(p), "GF modulus must be prime: " + std::to_string(p));
        return Field(Kind::gf, p);
    }
    static Field rationals() { return Field(Kind::rationals, 0); }

    // Accepts "GF(p)", "F_p", "QQ", "Q".
    static Field parse(const std::string& s);

    Kind kind() const { return kind_; }
    bool is_gf() const { return kind_ == Kind::gf; }
    bool is_q() const { return kind_ == Kind::rationals; }
    uint32_t p() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    std::string str() const { return is_gf() ? "GF(" + std::to_string(p_) + ")" : "QQ"; }

private:
    Field(Kind k, uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    uint32_t p_;
};

// A single field element, tagged with its field. Used outside hot loops;
// matrix inner loops work on typed storage directly.
class Fel {
public:
    Fel() : f_(Field::gfp(2)), u_(0) {}
    static Fel zero(const Field& f) { return from_int(f, 0); }
    static Fel one(const Field& f) { return from_int(f, 1); }
    static Fel from_int(const Field& f, long long v) {
        Fel x(f);
        if (f.is_gf())
            x.u_ = gf::from_int(v, f.p());
        else
            x.q_ = Rat(static_cast<long>(v));
        return x;
    }
    static Fel from_rat(const Field& f, const Rat& r);
    static Fel from_gf(const Field& f, uint32_t u) {
        Fel x(f);
        x.u_ = u;
        return x;
    }
    // Parses "n" or "n/d".
    static Fel parse(const Field& f, const std::string& s);

    const Field& field() const { return f_; }
    bool is_zero() const { return f_.is_gf() ? u_ == 0 : q_ == 0; }
    bool is_one() const { return f_.is_gf() ? u_ == 1 % f_.p() : q_ == 1; }
    uint32_t u() const { return u_; }
    const Rat& q() const { return q_; }

    Fel operator+(const Fel& o) const;
    Fel operator-(const Fel& o) const;
    Fel operator*(const Fel& o) const;
    Fel operator-() const;
    Fel inv() const;

    bool operator==(const Fel& o) const {
        KOTHE_CHECK(f_ == o.f_, "field mismatch");
        return f_.is_gf() ? u_ == o.u_ : q_ == o.q_;
    }
    bool operator!=(const Fel& o) const { return !(*this == o); }

    std::string str() const;

private:
    explicit Fel(const Field& f) : f_(f), u_(0) {}
    Field f_;
    uint32_t u_;
    Rat q_;
};

// Deterministic seeded generator. Bounded draws use rejection sampling so the
// output stream does not depend on the platform's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        // splitmix64: tiny, fully specified, portable
        uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n >= 1.
    uint64_t below(uint64_t n) {
        KOTHE_CHECK(n >= 1, "Rng::below(0)");
        uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % n;
    }

    Fel fel(const Field& f) {
        if (f.is_gf()) return Fel::from_gf(f, static_cast<uint32_t>(below(f.p())));
        // small integers keep rational growth in check
        return Fel::from_int(f, static_cast<long>(below(11)) - 5);
    }

    // Nonzero elements; over QQ draws from {-5..5}\{0}.
    Fel fel_nonzero(const Field& f) {
        for (;;) {
            Fel x = fel(f);
            if (!x.is_zero()) return x;
        }
    }

private:
    uint64_t s_;
};

}  // namespace la
}  // namespace kothe
