#include "dhh/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace dhh::linfp {

namespace {

void xor_rows_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

void axpy_rows_scalar(std::uint8_t* dst, const std::uint8_t* src, std::uint32_t c,
                      std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t t = dst[i] + c * static_cast<std::uint32_t>(src[i]);
        dst[i] = static_cast<std::uint8_t>(t % p);
    }
}

void scale_row_scalar(std::uint8_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = static_cast<std::uint8_t>((c * static_cast<std::uint32_t>(dst[i])) % p);
    }
}

const Kernels g_scalar = {xor_rows_scalar, axpy_rows_scalar, scale_row_scalar, "scalar"};

const Kernels* g_forced = nullptr;

}  // namespace

const Kernels& scalar_kernels() { return g_scalar; }

#if defined(DHH_HAVE_AVX2)
const Kernels& avx2_kernels();  // kernels_avx2.cpp
bool avx2_available() { return __builtin_cpu_supports("avx2"); }
#else
bool avx2_available() { return false; }
#endif

const Kernels& active_kernels() {
    if (g_forced) return *g_forced;
    static const Kernels* selected = [] {
        const char* env = std::getenv("DHH_KERNELS");
        if (env && std::strcmp(env, "scalar") == 0) return &g_scalar;
#if defined(DHH_HAVE_AVX2)
        if (avx2_available()) return &avx2_kernels();
#endif
        return &g_scalar;
    }();
    return *selected;
}

bool force_kernels(const char* name) {
    if (!name) {
        g_forced = nullptr;
        return true;
    }
    if (std::strcmp(name, "scalar") == 0) {
        g_forced = &g_scalar;
        return true;
    }
#if defined(DHH_HAVE_AVX2)
    if (std::strcmp(name, "avx2") == 0 && avx2_available()) {
        g_forced = &avx2_kernels();
        return true;
    }
#endif
    return false;
}

}  // namespace dhh::linfp
