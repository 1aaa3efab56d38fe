#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dhh/diffmod.hpp"

namespace dhh::diffpoly {

using diffmod::DiffRingPtr;
using linfp::Matrix;
using linfp::Subspace;
using linfp::Vec;

// Truncated difference polynomial ring in `families` shift families of
// variables x_{f,0}..x_{f,order}, total degree <= degree, coefficients in a
// finite difference ring k. sigma shifts the variable index inside each
// family and sends top-index variables to zero, which is the ring
// endomorphism induced by the substitution x_{f,order} -> 0.
struct TruncRing {
    DiffRingPtr base;
    std::uint32_t families = 1;
    std::uint32_t order = 0;   // variables per family: order+1
    std::uint32_t degree = 0;  // total degree cap
    std::vector<std::vector<std::uint8_t>> monos;  // graded-lex, exponent vectors
    std::map<std::vector<std::uint8_t>, std::uint32_t> mono_index;
    Matrix sigma;  // on full coordinates

    std::uint32_t nvars() const { return families * (order + 1); }
    std::uint32_t var(std::uint32_t family, std::uint32_t idx) const { return family * (order + 1) + idx; }
    std::uint32_t mono_count() const { return static_cast<std::uint32_t>(monos.size()); }
    std::uint32_t dim() const { return mono_count() * base->dim; }
    std::uint32_t coord(std::uint32_t mono, std::uint32_t kbasis) const { return mono * base->dim + kbasis; }

    std::optional<std::uint32_t> mono_mul(std::uint32_t a, std::uint32_t b) const;  // nullopt = overflow
    std::optional<std::uint32_t> mono_sigma(std::uint32_t m) const;                 // nullopt = killed
    std::uint32_t mono_degree(std::uint32_t m) const;
    bool mono_interior(std::uint32_t m) const;  // max index < order and degree < degree cap

    Vec mul_vec(const Vec& a, const Vec& b) const;  // truncating product
    Matrix mult_matrix(const Vec& a) const;
    Vec generator(std::uint32_t family, std::uint32_t idx) const;  // x_{f,idx} * 1_k
};

TruncRing trunc_ring(DiffRingPtr k, std::uint32_t order, std::uint32_t degree,
                     std::uint32_t families = 1);

// Difference derivations on the window: d(x_i) = sigma^i(p_0) with p_0 free
// over the full truncated basis, extended by the Leibniz rule; the sigma
// compatibility sigma(d(f)) = d(sigma(f)) is verified on interior monomials.
struct DerivationSolveReport {
    std::uint32_t dim = 0;            // free coefficients of p_0
    std::uint32_t classical_dim = 0;  // unconstrained assignments q_0..q_r
    bool sigma_compat_verified = false;
};
DerivationSolveReport derivation_solve(DiffRingPtr k, std::uint32_t order, std::uint32_t degree);

// Evaluation matrix of the p_0-family derivation on the whole window:
// columns = p_0 coordinates, rows = ring coordinates of d(mono).
Matrix derivation_matrix(const TruncRing& r1, std::uint32_t mono);

// f: (i,p) -> z_i p and g: (i,j,p) -> (i, z_j p) - (j, z_i p) on truncated
// k{x,y}; exactness of ker f = im g is asserted on interior coordinates only,
// with the boundary discrepancy reported.
struct ResolutionReport {
    Matrix f, g, eps;
    bool fg_zero = false;
    bool eps_f_zero = false;
    std::uint32_t ker_f_dim = 0, im_g_dim = 0;              // full truncated window
    std::uint32_t interior_ker_dim = 0, interior_im_dim = 0;
    bool interior_equal = false;
};
ResolutionReport resolution_maps(DiffRingPtr k, std::uint32_t order, std::uint32_t degree);

// Windowed degree-0/1 cohomology of k{t} from the resolution: the hom windows
// are ladder windows (rungs x layers with interior ladder constraints only;
// the rung count r+1 realizes the Z-indexed window of size 2r+1).
struct HHWindowReport {
    std::uint32_t hh0 = 0, hh1 = 0;
    std::uint32_t expected0 = 0, expected1 = 0;
    bool fstar_zero = false, gstar_zero = false;
    bool match() const { return hh0 == expected0 && hh1 == expected1; }
};
HHWindowReport hh_windowed(DiffRingPtr k, std::uint32_t order, std::uint32_t degree);

// Windowed check of k{t}^e = k{x,y}: (nu, mu) -> x^nu y^mu is a bijection
// between degree-compatible pairs and the k{x,y} window basis.
bool envelope_window_iso(DiffRingPtr k, std::uint32_t order, std::uint32_t degree);

}  // namespace dhh::diffpoly
