#pragma once

#include <cstddef>
#include <cstdint>

namespace dhh::linfp {

// Row-operation kernels sitting under every elimination. The scalar versions
// are the reference semantics; wider variants are selected at runtime and must
// agree bit-for-bit with scalar on all inputs (enforced in test_kernels.cpp).
//
// Preconditions shared by the byte kernels: all entries < p, 0 < c < p,
// p prime, p <= 251, dst/src do not alias.
struct Kernels {
    // dst ^= src over nwords 64-bit words (packed F_2 rows).
    void (*xor_rows)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    // dst[i] = (dst[i] + c*src[i]) mod p.
    void (*axpy_rows)(std::uint8_t* dst, const std::uint8_t* src, std::uint32_t c,
                      std::size_t n, std::uint32_t p);
    // dst[i] = (c*dst[i]) mod p.
    void (*scale_row)(std::uint8_t* dst, std::uint32_t c, std::size_t n, std::uint32_t p);
    const char* name;
};

const Kernels& scalar_kernels();

// Runtime-selected table: AVX2 when the CPU has it, scalar otherwise.
// DHH_KERNELS=scalar|avx2 in the environment overrides the choice.
const Kernels& active_kernels();

// Force a table by name ("scalar", "avx2"); nullptr restores auto-detection.
// Returns false if the requested table is unavailable on this machine.
bool force_kernels(const char* name);

bool avx2_available();

}  // namespace dhh::linfp
