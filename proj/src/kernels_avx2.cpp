// AVX2 variants of the row kernels. Compiled with -mavx2 and only ever
// dispatched to after a runtime cpuid check (see kernels.cpp).

#include "dhh/kernels.hpp"

#if defined(DHH_HAVE_AVX2)

#include <immintrin.h>

#include <array>

namespace dhh::linfp {

namespace {

void xor_rows_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < nwords; ++i) dst[i] ^= src[i];
}

// mod-p reduction of 16-bit lanes by multiply-shift: q = (x*M >> 16) >> sh,
// r = x - q*p. The pair (M, sh) is validated exhaustively over all x < 2^16
// before use; mod_magic marks p unusable if no pair passes (then we fall back
// to scalar for that p, which does not happen for primes <= 251).
struct Magic {
    std::uint16_t m = 0;
    int sh = 0;
    bool ok = false;
};

Magic find_magic(std::uint32_t p) {
    for (int sh = 0; sh <= 9; ++sh) {
        for (std::uint64_t cand : {((std::uint64_t{1} << (16 + sh)) / p),
                                   ((std::uint64_t{1} << (16 + sh)) / p) + 1}) {
            if (cand == 0 || cand > 0xFFFF) continue;
            bool good = true;
            for (std::uint32_t x = 0; x < 0x10000; ++x) {
                std::uint32_t q = static_cast<std::uint32_t>((x * cand) >> 16) >> sh;
                if (q != x / p) {
                    good = false;
                    break;
                }
            }
            if (good) return Magic{static_cast<std::uint16_t>(cand), sh, true};
        }
    }
    return Magic{};
}

const Magic& mod_magic(std::uint32_t p) {
    static std::array<Magic, 256> table = [] {
        std::array<Magic, 256> t{};
        return t;
    }();
    static std::array<bool, 256> built{};
    if (!built[p]) {
        table[p] = find_magic(p);
        built[p] = true;
    }
    return table[p];
}

inline __m256i reduce_u16(__m256i x, __m256i vm, int sh, __m256i vp) {
    __m256i q = _mm256_srli_epi16(_mm256_mulhi_epu16(x, vm), sh);
    return _mm256_sub_epi16(x, _mm256_mullo_epi16(q, vp));
}

void axpy_rows_avx2(std::uint8_t* dst, const std::uint8_t* src, std::uint32_t c,
                    std::size_t n, std::uint32_t p) {
    const Magic& mg = mod_magic(p);
    if (!mg.ok) {
        scalar_kernels().axpy_rows(dst, src, c, n, p);
        return;
    }
    const __m256i vm = _mm256_set1_epi16(static_cast<short>(mg.m));
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s0 = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(s));
        __m256i s1 = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(s, 1));
        __m256i d0 = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(d));
        __m256i d1 = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(d, 1));
        __m256i t0 = _mm256_add_epi16(d0, _mm256_mullo_epi16(s0, vc));
        __m256i t1 = _mm256_add_epi16(d1, _mm256_mullo_epi16(s1, vc));
        __m256i r0 = reduce_u16(t0, vm, mg.sh, vp);
        __m256i r1 = reduce_u16(t1, vm, mg.sh, vp);
        __m256i packed = _mm256_packus_epi16(r0, r1);
        packed = _mm256_permute4x64_epi64(packed, 0xD8);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), packed);
    }
    if (i < n) scalar_kernels().axpy_rows(dst + i, src + i, c, n - i, p);
}

void scale_row_avx2(std::uint8_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p) {
    const Magic& mg = mod_magic(p);
    if (!mg.ok) {
        scalar_kernels().scale_row(dst, c, n, p);
        return;
    }
    const __m256i vm = _mm256_set1_epi16(static_cast<short>(mg.m));
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i d0 = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(d));
        __m256i d1 = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(d, 1));
        __m256i r0 = reduce_u16(_mm256_mullo_epi16(d0, vc), vm, mg.sh, vp);
        __m256i r1 = reduce_u16(_mm256_mullo_epi16(d1, vc), vm, mg.sh, vp);
        __m256i packed = _mm256_packus_epi16(r0, r1);
        packed = _mm256_permute4x64_epi64(packed, 0xD8);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), packed);
    }
    if (i < n) scalar_kernels().scale_row(dst + i, c, n - i, p);
}

const Kernels g_avx2 = {xor_rows_avx2, axpy_rows_avx2, scale_row_avx2, "avx2"};

}  // namespace

const Kernels& avx2_kernels() { return g_avx2; }

}  // namespace dhh::linfp

#endif  // DHH_HAVE_AVX2
