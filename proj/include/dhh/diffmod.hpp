#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dhh/matrix.hpp"

namespace dhh::diffmod {

using linfp::Matrix;
using linfp::SpanSolver;
using linfp::Subspace;
using linfp::Vec;

// Finite-dimensional commutative difference ring over F_p, presented by
// structure constants on an F_p-basis: mult[i][j] = coordinates of e_i e_j.
struct DiffRing {
    std::uint32_t p = 2;
    std::uint32_t dim = 0;
    std::vector<std::vector<Vec>> mult;
    Vec unit;
    Matrix sigma;

    bool inversive() const;
    Vec mul_vec(const Vec& a, const Vec& b) const;
    Matrix mult_matrix(const Vec& a) const;       // multiplication-by-a operator
    Matrix basis_mult_matrix(std::uint32_t i) const;
};

using DiffRingPtr = std::shared_ptr<const DiffRing>;

DiffRingPtr prime_field(std::uint32_t p);

// Difference module over a ring: one action matrix per ring basis element and
// a sigma that is semilinear over the ring's sigma.
struct DiffModule {
    DiffRingPtr ring;
    std::uint32_t dim = 0;
    std::vector<Matrix> act;  // act[i] = action of ring basis element e_i
    Matrix sigma;

    std::uint32_t p() const { return ring->p; }
    Matrix act_of(const Vec& lambda) const;
    bool inversive() const;
};

// Associative unital difference algebra over the ring of its underlying module.
struct DiffAlgebra {
    DiffModule module;  // k-module structure of A, including sigma_A
    std::vector<std::vector<Vec>> mult;
    Vec unit;

    std::uint32_t dim() const { return module.dim; }
    std::uint32_t p() const { return module.p(); }
    const DiffRingPtr& ring() const { return module.ring; }
    Vec mul_vec(const Vec& a, const Vec& b) const;
    Matrix left_mult(std::uint32_t i) const;   // left multiplication by basis a_i
    Matrix right_mult(std::uint32_t i) const;  // right multiplication by basis a_i
    Matrix left_mult_of(const Vec& a) const;
    Matrix right_mult_of(const Vec& a) const;
};

using DiffAlgebraPtr = std::shared_ptr<const DiffAlgebra>;

// A-bimodule: left/right action matrices per A-basis element on top of the
// k-module structure, with sigma_M semilinear over sigma_A on both sides.
struct Bimodule {
    DiffAlgebraPtr algebra;
    DiffModule module;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    std::uint32_t dim() const { return module.dim; }
    std::uint32_t p() const { return module.p(); }
    Matrix left_of(const Vec& a) const;
    Matrix right_of(const Vec& a) const;
};

enum class MapKind { Additive, KLinear, DiffKLinear };

struct DiffMap {
    Matrix matrix;  // dim(target) x dim(source)
    MapKind kind = MapKind::Additive;
};

struct Violation {
    std::string identity;
    std::string witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::string first() const { return violations.empty() ? "" : violations.front().identity + " @ " + violations.front().witness; }
};

ValidationReport validate(const DiffRing& k);
ValidationReport validate(const DiffModule& m);
ValidationReport validate(const DiffAlgebra& a);
ValidationReport validate(const Bimodule& m);

bool is_k_linear(const Matrix& f, const DiffModule& src, const DiffModule& tgt);
bool is_difference_linear(const Matrix& f, const DiffModule& src, const DiffModule& tgt);

// Basis of all matrices F with F act_src(e_i) = act_tgt(e_i) F and
// F sigma_src = sigma_tgt F; valid for non-inversive sigma as well.
struct HomBasis {
    std::vector<Matrix> basis;  // canonical (flattened RREF order)
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.size()); }
};
HomBasis hom_diff(const DiffModule& m, const DiffModule& n);
HomBasis hom_k_linear(const DiffModule& m, const DiffModule& n);  // no sigma condition

// Quotient presentation machinery: canonical lifts plus a coordinate solver.
struct QuotientMap {
    Matrix lifts;       // q x ambient rows; class representatives
    Matrix killed;      // basis of the subspace quotiented away
    SpanSolver solver;  // built on [lifts; killed]
    std::uint32_t ambient = 0;

    std::uint32_t dim() const { return lifts.rows(); }
    Vec coords(const Vec& ambient_vec) const;  // class coordinates
    Matrix induced(const Matrix& op) const;    // operator descends to the quotient
    bool descends(const Matrix& op) const;     // op(killed) is contained in killed
};
QuotientMap quotient_map(const Subspace& space, const Subspace& killed);

// H = coc/cob packaged as a DiffModule with induced action and sigma on
// canonical lifts. StabilityViolation if either subspace moves under act/sigma.
struct SubquotientModule {
    DiffModule module;
    QuotientMap classes;
};
SubquotientModule subquotient_module(const Subspace& coc, const Subspace& cob, const DiffModule& ambient);

Subspace fix_module(const DiffModule& m);     // ker(sigma - 1)
QuotientMap coinv_module(const DiffModule& m);  // coker(sigma - 1)

DiffAlgebra opposite(const DiffAlgebra& a);

DiffModule restrict_to_k(const Bimodule& m);

// Regular bimodule: A acting on itself by multiplication, sigma twisted by a
// central unit u (u = unit gives the untwisted case).
Bimodule regular_bimodule(DiffAlgebraPtr a, const Vec& twist_unit);

}  // namespace dhh::diffmod
