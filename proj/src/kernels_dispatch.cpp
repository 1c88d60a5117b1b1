#include "kothe/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace kothe::la::kern {

namespace {

struct Table {
    void (*axpy)(uint32_t*, const uint32_t*, uint32_t, std::size_t, uint32_t);
    void (*scale)(uint32_t*, uint32_t, std::size_t, uint32_t);
    void (*add)(uint32_t*, const uint32_t*, std::size_t, uint32_t);
    void (*sub)(uint32_t*, const uint32_t*, std::size_t, uint32_t);
    Impl impl;
};

constexpr Table kScalar{scalar_impl::axpy, scalar_impl::scale, scalar_impl::add,
                        scalar_impl::sub, Impl::scalar};

#if defined(__x86_64__)
constexpr Table kAvx2{avx2_impl::axpy, avx2_impl::scale, avx2_impl::add, avx2_impl::sub,
                      Impl::avx2};
#endif

Table detect() {
#if defined(__x86_64__)
    if (const char* env = std::getenv("KOTHE_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return kScalar;
        if (std::strcmp(env, "avx2") == 0 && __builtin_cpu_supports("avx2")) return kAvx2;
    }
    if (__builtin_cpu_supports("avx2")) return kAvx2;
#endif
    return kScalar;
}

Table g_table = detect();

}  // namespace

bool avx2_available() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Impl active() { return g_table.impl; }

const char* impl_name(Impl impl) { return impl == Impl::scalar ? "scalar" : "avx2"; }

void force(Impl impl) {
    if (impl == Impl::scalar) {
        g_table = kScalar;
        return;
    }
#if defined(__x86_64__)
    if (impl == Impl::avx2 && avx2_available()) {
        g_table = kAvx2;
        return;
    }
#endif
    throw std::runtime_error("requested kernel implementation not available on this CPU");
}

void axpy(uint32_t* z, const uint32_t* y, uint32_t c, std::size_t n, uint32_t p) {
    g_table.axpy(z, y, c, n, p);
}
void scale(uint32_t* z, uint32_t c, std::size_t n, uint32_t p) { g_table.scale(z, c, n, p); }
void add(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p) { g_table.add(z, y, n, p); }
void sub(uint32_t* z, const uint32_t* y, std::size_t n, uint32_t p) { g_table.sub(z, y, n, p); }

}  // namespace kothe::la::kern
