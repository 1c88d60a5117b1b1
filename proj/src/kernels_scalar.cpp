// Reference kernels. Plain 64-bit arithmetic with a hardware modulo per
// element; the oracle the SIMD variants are tested against.

#include "kothe/kernels.hpp"

namespace kothe::la::kern::scalar_impl {

void axpy(uint32_t* z, const uint32_t* y, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        z[i] = static_cast<uint32_t>((z[i] + static_cast<uint64_t>(c) * y[i]) % p);
}

void scale(uint32_t* z, uint32_t c, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        z[i] = static_cast<uint32_t>(static_cast<uint64_t>(c) * z[i] % p);
}

void add(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        uint32_t s = z[i] + y[i];
        z[i] = s >= p ? s - p : s;
    }
}

void sub(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        z[i] = z[i] >= y[i] ? z[i] - y[i] : z[i] + p - y[i];
}

}  // namespace kothe::la::kern::scalar_impl
