#pragma once

#include <cstdint>
#include <vector>

#include "dhh/diffmod.hpp"
#include "dhh/ihom.hpp"
#include "dhh/tensorcat.hpp"

namespace dhh::hochschild {

using diffmod::Bimodule;
using diffmod::DiffAlgebraPtr;
using diffmod::DiffModule;
using diffmod::SubquotientModule;
using ihom::IHom;
using linfp::Matrix;
using linfp::Subspace;
using linfp::Vec;
using tensorcat::TensorPowers;

enum class Provenance { Hochschild, Bar, Fix, Coinv, Cone, Abstract };

// Bounded cochain complex of difference modules: terms C^0..C^T and
// differentials d^n : C^n -> C^{n+1}. Constructors verify d o d = 0 and the
// difference-k-linearity of every differential.
struct CochainComplex {
    std::vector<DiffModule> terms;
    std::vector<Matrix> d;
    Provenance provenance = Provenance::Abstract;

    std::uint32_t length() const { return static_cast<std::uint32_t>(terms.size()); }
};

void verify_complex(const CochainComplex& c);

// C[A;M] with terms [A^{(x)n}, M]_k for n = 0..D+1 and differentials the
// alternating face sums, assembled as matrices on the carrier bases. Terms
// run one past the requested degree so H^0..H^D are exact.
struct HochschildData {
    CochainComplex complex;
    std::vector<IHom> carriers;  // carrier of [A^{(x)n}, M]
    TensorPowers powers;
};

std::uint64_t default_dim_cap();

HochschildData hochschild_complex(DiffAlgebraPtr a, const Bimodule& m, std::uint32_t max_degree,
                                  std::uint64_t dim_cap = default_dim_cap());

// Individual face map on carriers (for the simplicial identity tests):
// face i of d^n, 0 <= i <= n+1.
Matrix hochschild_face(const Bimodule& m, const TensorPowers& powers, const std::vector<IHom>& carriers,
                       std::uint32_t n, std::uint32_t i);

struct CohomologyDegree {
    SubquotientModule h;
    std::uint32_t dim = 0;
    std::uint32_t fix_dim = 0;
    std::uint32_t coinv_dim = 0;
};

struct CohomologyReport {
    std::vector<CohomologyDegree> degrees;  // H^0 .. H^{T-1}
    std::vector<std::uint32_t> dims() const;
};

CohomologyReport cohomology(const CochainComplex& c);

// Bar complex A^{(x) n+2} with d'_n = sum (-1)^i delta'_i (d'_0 is the
// multiplication/augmentation), contracting homotopy s_n(x) = 1 (x) x.
struct BarComplex {
    TensorPowers powers;
    std::vector<std::uint32_t> dims;  // dims[n] = dim A^{(x) n+2}
    std::vector<Matrix> d;            // d[n] : A^{(x)n+2} -> A^{(x)n+1}
    std::vector<Matrix> s;            // s[n] : A^{(x)n+1} -> A^{(x)n+2}
    Matrix mu;                        // = d[0]
};

BarComplex bar_complex(DiffAlgebraPtr a, std::uint32_t max_degree,
                       std::uint64_t dim_cap = default_dim_cap());

struct BarChecks {
    bool dd_zero = false;
    bool homotopy = false;       // d'_{n+1} s_{n+1} + s_n d'_n = id
    bool augmentation = false;   // mu o s_0 = id on A
    bool pass() const { return dd_zero && homotopy && augmentation; }
};
BarChecks verify_bar(const BarComplex& b);

// Degree-0 formula: intersection over i >= 0 of
// { m : left(a) sigma^i(m) = right(a) sigma^i(m) for all a }, iterated until
// the descending chain stabilizes (sigma_M invertible, so the chain is over
// the finite cyclic group generated by sigma_M).
Subspace hh0_direct(const diffmod::DiffAlgebra& a, const Bimodule& m);

// Degree-1 formulas: difference derivations among the carrier of [A,M], inner
// derivations, and the quotient dimension (= dim H^1).
struct DerivationReport {
    Subspace all;    // flattened k-linear Leibniz maps
    Subspace inner;  // flattened span of a -> am - ma
    std::uint32_t quotient_dim = 0;
};
DerivationReport derivations(const diffmod::DiffAlgebra& a, const Bimodule& m);

// Cohomology dims of the complex Hom_{A^e-diff}(A^{(x) bullet+2}, M) with
// precomposition differentials; matches the Fix complex of C[A;M] degreewise.
std::vector<std::uint32_t> bar_env_fix_dims(DiffAlgebraPtr a, const Bimodule& m,
                                            std::uint32_t max_degree,
                                            std::uint64_t dim_cap = default_dim_cap());

}  // namespace dhh::hochschild
