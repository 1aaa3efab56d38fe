#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dhh/diffmod.hpp"
#include "dhh/hochschild.hpp"

namespace dhh::instances {

using diffmod::Bimodule;
using diffmod::DiffAlgebra;
using diffmod::DiffAlgebraPtr;
using diffmod::DiffModule;
using diffmod::DiffRing;
using diffmod::DiffRingPtr;
using linfp::Matrix;
using linfp::Vec;

// Deterministic random source: identical draws on every platform for a given
// seed (std::mt19937_64 raw output only, no distribution objects).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next();
    std::uint32_t below(std::uint32_t n);                 // uniform in [0, n)
    std::uint32_t weighted(const std::vector<std::uint32_t>& w);

private:
    std::uint64_t state_;
};

struct Instance {
    std::string name;
    DiffAlgebraPtr algebra;
    Bimodule bimodule;
};

// ---- named constructions ----

DiffRingPtr field_ext_ring(std::uint32_t p, bool frobenius);             // F_{p^2}
DiffRingPtr dual_numbers_ring(std::uint32_t p, std::uint32_t unit);      // F_p[eps], sigma(eps)=u*eps
DiffRingPtr product_ring(std::uint32_t p, bool swap);                    // F_p x F_p
DiffRingPtr cyclic_product_ring(std::uint32_t p, std::uint32_t n);       // F_p^n, rotation

DiffAlgebraPtr ring_as_algebra(DiffRingPtr k);
// A = k[d]/(d^2 - square) with sigma_A(d) = twist * d (twist a unit of k;
// square = 0 or 1; for square = 1 the twist must satisfy twist^2 = 1).
DiffAlgebraPtr free_rank2_algebra(DiffRingPtr k, bool square_one, const Vec& twist);
DiffAlgebraPtr upper_triangular2(std::uint32_t p);  // over F_p
DiffAlgebraPtr matrix2(std::uint32_t p);            // M_2(F_p) over F_p

Bimodule augmentation_bimodule(DiffAlgebraPtr a);  // for free_rank2 algebras: d -> 0 resp. 1

// Central elements of A (as a subspace basis).
Matrix center_basis(const DiffAlgebra& a);

// ---- presets ----

std::vector<std::string> preset_names();
Instance preset(const std::string& name);

// ---- seeded random instances ----

struct InstanceOptions {
    std::uint32_t max_degree = 4;    // top carrier dimension is budgeted for this
    bool inversive = true;
    std::uint32_t budget_p2 = 4096;  // cap on dim M * dim A^{(x) D+1} over F_p
    std::uint32_t budget_odd = 768;
};

Instance random_instance(RandomSource& rng, const InstanceOptions& opt = {});

// Random free difference module of small rank over k (sigma = k-linear
// automorphism twist of the diagonal sigma).
DiffModule random_module(RandomSource& rng, DiffRingPtr k, std::uint32_t rank, bool inversive);

DiffRingPtr random_base_ring(RandomSource& rng, std::uint32_t p, bool inversive);

// Random bounded complex of difference modules over F_p: differentials drawn
// from the solution space of { d sigma = sigma d, d d_prev = 0 }.
hochschild::CochainComplex random_complex(RandomSource& rng, std::uint32_t max_len,
                                          std::uint32_t max_dim, std::uint32_t p);

Matrix random_invertible(RandomSource& rng, std::uint32_t n, std::uint32_t p);

}  // namespace dhh::instances
