// Dense GF(p) row kernels: the data-parallel inner loops under rref and
// matrix multiplication. A scalar reference implementation is always
// available; an AVX2 variant is selected at runtime when the CPU supports it.
// Both paths produce identical canonical residues and are equivalence-tested.
//
// Conventions: all inputs are canonical residues in [0,p), c < p, p an odd or
// even prime < 2^31. The AVX2 path uses Shoup's precomputed-quotient trick for
// multiplication by the fixed scalar c.

#pragma once

#include <cstddef>
#include <cstdint>

namespace kothe::la::kern {

enum class Impl { scalar, avx2 };

// Implementation selected for the process (auto-detected on first use).
Impl active();
// Force an implementation; throws if unavailable on this CPU. Used by the
// equivalence tests and the KOTHE_KERNEL env override.
void force(Impl impl);
bool avx2_available();
const char* impl_name(Impl impl);

// z[i] = (z[i] + c*y[i]) mod p
void axpy(uint32_t* z, const uint32_t* y, uint32_t c, std::size_t n, uint32_t p);
// z[i] = (c*z[i]) mod p
void scale(uint32_t* z, uint32_t c, std::size_t n, uint32_t p);
// z[i] = (z[i] + y[i]) mod p
void add(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p);
// z[i] = (z[i] - y[i]) mod p
void sub(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p);

namespace scalar_impl {
void axpy(uint32_t* z, const uint32_t* y, uint32_t c, std::size_t n, uint32_t p);
void scale(uint32_t* z, uint32_t c, std::size_t n, uint32_t p);
void add(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p);
void sub(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p);
}  // namespace scalar_impl

#if defined(__x86_64__)
namespace avx2_impl {
void axpy(uint32_t* z, const uint32_t* y, uint32_t c, std::size_t n, uint32_t p);
void scale(uint32_t* z, uint32_t c, std::size_t n, uint32_t p);
void add(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p);
void sub(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p);
}  // namespace avx2_impl
#endif

}  // namespace kothe::la::kern
