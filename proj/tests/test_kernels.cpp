// Scalar/AVX2 kernel equivalence. The scalar path is the reference; the AVX2
// path must produce bit-identical canonical residues for every op, every
// modulus class (including p = 2 and the largest allowed prime), and every
// tail length.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "kothe/field.hpp"
#include "kothe/kernels.hpp"

using namespace kothe::la;

namespace {

std::vector<uint32_t> random_residues(Rng& rng, std::size_t n, uint32_t p) {
    std::vector<uint32_t> v(n);
    for (auto& x : v) x = static_cast<uint32_t>(rng.below(p));
    return v;
}

const uint32_t kPrimes[] = {2, 3, 5, 7, 127, 65537, 1000000007, 2147483647};

}  // namespace

TEST_CASE("scalar axpy matches direct 64-bit arithmetic") {
    Rng rng(42);
    for (uint32_t p : kPrimes) {
        auto z = random_residues(rng, 37, p);
        auto y = random_residues(rng, 37, p);
        uint32_t c = static_cast<uint32_t>(rng.below(p));
        auto expect = z;
        for (std::size_t i = 0; i < z.size(); ++i)
            expect[i] = static_cast<uint32_t>((expect[i] + static_cast<uint64_t>(c) * y[i]) % p);
        kern::scalar_impl::axpy(z.data(), y.data(), c, z.size(), p);
        CHECK(z == expect);
    }
}

#if defined(__x86_64__)
TEST_CASE("avx2 kernels agree with scalar reference") {
    if (!kern::avx2_available()) {
        MESSAGE("AVX2 not available; skipping");
        return;
    }
    Rng rng(7);
    for (uint32_t p : kPrimes) {
        for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 333u}) {
            auto z0 = random_residues(rng, n, p);
            auto y = random_residues(rng, n, p);
            uint32_t c = static_cast<uint32_t>(rng.below(p));

            auto za = z0, zb = z0;
            kern::scalar_impl::axpy(za.data(), y.data(), c, n, p);
            kern::avx2_impl::axpy(zb.data(), y.data(), c, n, p);
            CHECK(za == zb);

            za = z0, zb = z0;
            kern::scalar_impl::scale(za.data(), c, n, p);
            kern::avx2_impl::scale(zb.data(), c, n, p);
            CHECK(za == zb);

            za = z0, zb = z0;
            kern::scalar_impl::add(za.data(), y.data(), n, p);
            kern::avx2_impl::add(zb.data(), y.data(), n, p);
            CHECK(za == zb);

            za = z0, zb = z0;
            kern::scalar_impl::sub(za.data(), y.data(), n, p);
            kern::avx2_impl::sub(zb.data(), y.data(), n, p);
            CHECK(za == zb);
        }
    }
}

TEST_CASE("avx2 handles boundary residues p-1 and c = p-1") {
    if (!kern::avx2_available()) return;
    for (uint32_t p : kPrimes) {
        std::vector<uint32_t> z(24, p - 1), y(24, p - 1);
        auto za = z, zb = z;
        kern::scalar_impl::axpy(za.data(), y.data(), p - 1, z.size(), p);
        kern::avx2_impl::axpy(zb.data(), y.data(), p - 1, z.size(), p);
        CHECK(za == zb);
    }
}
#endif

TEST_CASE("dispatch honors force()") {
    kern::force(kern::Impl::scalar);
    CHECK(kern::active() == kern::Impl::scalar);
    std::vector<uint32_t> z{1, 2, 3}, y{4, 5, 6};
    kern::axpy(z.data(), y.data(), 2, 3, 7);
    CHECK(z == std::vector<uint32_t>{2, 5, 1});
    if (kern::avx2_available()) {
        kern::force(kern::Impl::avx2);
        CHECK(kern::active() == kern::Impl::avx2);
        std::vector<uint32_t> z2{1, 2, 3};
        kern::axpy(z2.data(), y.data(), 2, 3, 7);
        CHECK(z2 == std::vector<uint32_t>{2, 5, 1});
    }
}
