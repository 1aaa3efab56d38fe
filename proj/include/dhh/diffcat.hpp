#pragma once

#include <cstdint>
#include <vector>

#include "dhh/matrix.hpp"

namespace dhh::diffmod {
struct DiffModule;
}

namespace dhh::diffcat {

// Finite difference set: a set {0..size-1} with a total endomap.
struct DiffSet {
    std::uint32_t size = 0;
    std::vector<std::uint32_t> sigma;  // sigma[i] < size

    DiffSet() = default;
    DiffSet(std::uint32_t n, std::vector<std::uint32_t> s);

    static DiffSet identity(std::uint32_t n);
    static DiffSet cycle(std::uint32_t n);  // i -> i+1 mod n
};

// Depth-D truncation of the free shift on a base set: elements (s, i) with
// i < depth, sigma(s, i) = (s, i+1), undefined on the top layer (partial).
struct TruncatedShift {
    std::uint32_t base_size = 0;
    std::uint32_t depth = 0;
    bool partial = true;  // layer depth-1 carries no sigma image

    std::uint32_t size() const { return base_size * depth; }
    std::uint32_t index(std::uint32_t s, std::uint32_t layer) const { return s * depth + layer; }
    bool sigma_defined(std::uint32_t e) const { return e % depth + 1 < depth; }
    std::uint32_t sigma(std::uint32_t e) const { return e + 1; }  // only when sigma_defined
};

std::vector<std::uint32_t> fix(const DiffSet& x);

// Classes of the smallest equivalence relation identifying e with sigma(e),
// computed by union-find closure of the coequalizer. Classes are sorted.
std::vector<std::vector<std::uint32_t>> quo(const DiffSet& x);

TruncatedShift free_shift(std::uint32_t set_size, std::uint32_t depth);

// E (x) M: direct sum of |E| copies of M with sigma(e, v) = (sigma_E e, sigma_M v).
// Basis ordering: (e, m-basis) blocks, e major.
dhh::diffmod::DiffModule set_tensor(const DiffSet& e, const dhh::diffmod::DiffModule& m);

// Same construction over a truncated shift, with the undefined top layer sent
// to zero. The resulting sigma is a genuine semilinear map; truncation effects
// are confined to the top layer.
dhh::diffmod::DiffModule set_tensor_truncated(const TruncatedShift& e, const dhh::diffmod::DiffModule& m);

// Number of maps f: elements(E) -> X respecting sigma wherever E defines it.
// For depth 1 this counts all of Hom_Set(S, X).
std::uint64_t count_truncation_respecting_maps(const TruncatedShift& e, const DiffSet& x);

}  // namespace dhh::diffcat
