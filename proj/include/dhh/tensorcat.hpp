#pragma once

#include <cstdint>
#include <vector>

#include "dhh/diffmod.hpp"

namespace dhh::tensorcat {

using diffmod::Bimodule;
using diffmod::DiffAlgebra;
using diffmod::DiffAlgebraPtr;
using diffmod::DiffModule;
using diffmod::QuotientMap;
using linfp::Matrix;
using linfp::Subspace;
using linfp::Vec;

// M (x)_k N realized as the quotient of the F_p-space M (x) N by the
// balancing span { (lambda m_i) (x) n_j - m_i (x) (lambda n_j) }.
// Raw coordinates are row-major: (i, j) -> i * dim(N) + j.
struct TensorModule {
    DiffModule result;
    Matrix projection;  // result.dim x (dimM*dimN)
    Matrix lifts;       // result.dim x (dimM*dimN); projection * lifts^T = id
    std::uint32_t dim_m = 0, dim_n = 0;

    Vec pure(const Vec& m, const Vec& n) const;
};

TensorModule tensor(const DiffModule& m, const DiffModule& n);

// The unique map with (f (x) g)(m (x) n) = f(m) (x) g(n); matrix between the
// two quotient presentations.
Matrix tensor_map(const TensorModule& src, const TensorModule& dst, const Matrix& f, const Matrix& g);

// Left-associated iterated tensor powers of A with the multiplication
// contraction faces. Pure-tensor columns and a right inverse of the spanning
// matrix are kept per level so maps defined on pure tensors become matrices.
struct TensorPowers {
    DiffAlgebraPtr a;
    std::vector<DiffModule> power;    // power[n] = A^{(x) n}, power[0] = k
    std::vector<Matrix> pure_cols;    // pure_cols[n]: dim x d_A^n, col = flattened tuple
    std::vector<Matrix> right_inv;    // pure_cols[n] * right_inv[n] = id
    std::vector<TensorModule> steps;  // steps[n]: power[n] (x) A -> power[n+1]

    std::uint32_t levels() const { return static_cast<std::uint32_t>(power.size()); }
    std::uint64_t tuples(std::uint32_t n) const;

    // delta_i : A^{(x) m} -> A^{(x) m-1}, multiplying tensor slots i-1 and i
    // (1-indexed i, 0 < i < m).
    Matrix delta(std::uint32_t m, std::uint32_t i) const;

    // Matrix of the map defined on basis pure tensors by `values` (one column
    // per flat tuple of level n).
    Matrix map_from_pure_values(std::uint32_t n, const Matrix& values) const;
};

TensorPowers tensor_powers(DiffAlgebraPtr a, std::uint32_t max_power, std::uint64_t dim_cap);

// A^e = A (x) A^op with (a (x) b)(a' (x) b') = aa' (x) b'b.
struct Enveloping {
    DiffAlgebraPtr env;
    TensorModule structure;  // of A (x) A^op as k-modules
    DiffAlgebraPtr base;

    // Left A^e-action of the env basis elements on a bimodule ((a(x)b)m = amb).
    std::vector<Matrix> actions_on(const Bimodule& m) const;
};
Enveloping enveloping(DiffAlgebraPtr a);

struct UniversalCheckReport {
    std::uint32_t dim_balanced = 0;  // difference-equivariant k-balanced bilinear maps
    std::uint32_t dim_hom = 0;       // hom_diff(M (x) N, P)
    bool dims_equal = false;
    bool factorization_ok = false;   // every balanced basis map factors through (x)
    bool pass() const { return dims_equal && factorization_ok; }
};
UniversalCheckReport universal_check(const DiffModule& m, const DiffModule& n, const DiffModule& p);

struct UnitIso {
    Matrix to_module;    // tensor(M,k).result -> M,  m (x) lambda -> lambda m
    Matrix from_module;  // M -> tensor(M,k).result,  m -> m (x) 1
    bool is_iso = false;
    bool difference_linear = false;
};
UnitIso unit_iso(const DiffModule& m, const TensorModule& m_tensor_k);

// Canonical re-bracketing (a (x) b) (x) c -> a (x) (b (x) c).
struct AssociatorReport {
    Matrix map;
    bool is_iso = false;
};
AssociatorReport associator(const TensorModule& ab, const TensorModule& ab_c,
                            const TensorModule& bc, const TensorModule& a_bc,
                            std::uint32_t dim_a, std::uint32_t dim_b, std::uint32_t dim_c);

}  // namespace dhh::tensorcat
