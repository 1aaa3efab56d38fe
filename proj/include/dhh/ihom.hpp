#pragma once

#include <cstdint>
#include <vector>

#include "dhh/diffmod.hpp"

namespace dhh::ihom {

using diffmod::DiffModule;
using diffmod::DiffRingPtr;
using linfp::Matrix;
using linfp::SpanSolver;
using linfp::Subspace;
using linfp::Vec;

// Internal hom [M,N]_k in the inversive case: carrier = the space of k-linear
// matrices M -> N, sigma acting by conjugation f -> sigma_N f sigma_M^{-1},
// k acting post-hoc. Fix of the carrier is exactly hom_diff(M,N).
struct IHom {
    DiffModule carrier;         // act/sigma expressed on carrier coordinates
    std::vector<Matrix> basis;  // carrier basis as matrices (canonical order)
    Matrix flat;                // carrier.dim x (dimN*dimM), rows = flattened basis
    SpanSolver coords;          // coordinates of a flattened k-linear map
    std::uint32_t dim_src = 0, dim_tgt = 0;

    Matrix to_matrix(const Vec& carrier_coords) const;
    Vec from_matrix(const Matrix& f) const;
};

IHom ihom(const DiffModule& m, const DiffModule& n);  // throws InversivityRequired

Vec eval(const IHom& h, const Vec& element_coords, const Vec& m);

// [f,g] : [M',N] -> [M,N'], h -> g h f, for f: M -> M', g: N -> N'.
Matrix ihom_map(const IHom& src, const IHom& dst, const Matrix& f, const Matrix& g);

struct ShortExactSeq {
    DiffModule sub, mid, quo;
    Matrix inj;   // sub -> mid
    Matrix surj;  // mid -> quo
};

// Throws unless inj/surj are difference-k-linear, inj is injective, surj is
// surjective, and im(inj) = ker(surj).
void verify_ses(const ShortExactSeq& s);

struct ProjectivityReport {
    // Surjectivity of [x,B]_k -> [x,C]_k on carriers (k-linear map spaces).
    bool internal_surjective = false;
    // Surjectivity of Hom_diff(x,B) -> Hom_diff(x,C) (Fix level).
    bool fix_surjective = false;
    std::uint32_t carrier_b = 0, carrier_c = 0, fix_b = 0, fix_c = 0;
    bool pass() const { return internal_surjective && fix_surjective; }
};

ProjectivityReport internal_projectivity_witness(const DiffModule& x, const ShortExactSeq& ses);

// Windowed witness for x = (truncated free shift on a set of size set_size,
// depth layers) (x) k: the hom objects are presented on a rung/layer window
// with only interior ladder constraints, so no truncation boundary condition
// is imposed. Window solution dims are cross-checked against the grid count.
struct WindowedProjectivityReport {
    bool internal_surjective = false;
    bool fix_surjective = false;
    std::uint32_t window_b = 0, window_c = 0;
    std::uint32_t expected_window_b = 0, expected_window_c = 0;
    bool window_dims_match = false;
    bool pass() const { return internal_surjective && fix_surjective && window_dims_match; }
};

WindowedProjectivityReport windowed_shift_projectivity(std::uint32_t set_size, std::uint32_t depth,
                                                       std::uint32_t rungs, const ShortExactSeq& ses);

}  // namespace dhh::ihom
