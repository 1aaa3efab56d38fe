#include "dhh/ihom.hpp"

#include "dhh/errors.hpp"

namespace dhh::ihom {

using diffmod::hom_diff;
using diffmod::hom_k_linear;
using linfp::inverse;
using linfp::kernel_basis_matrix;
using linfp::rank;
using linfp::vec_is_zero;

Matrix IHom::to_matrix(const Vec& c) const {
    Matrix f(dim_tgt, dim_src, flat.p());
    for (std::uint32_t i = 0; i < basis.size(); ++i)
        if (c[i]) f = f + basis[i].scaled(c[i]);
    return f;
}

Vec IHom::from_matrix(const Matrix& f) const {
    Vec v(std::size_t(dim_tgt) * dim_src);
    for (std::uint32_t r = 0; r < dim_tgt; ++r)
        for (std::uint32_t c = 0; c < dim_src; ++c) v[std::size_t(r) * dim_src + c] = f.at(r, c);
    return coords.coords_or_throw(v, "IHom::from_matrix");
}

namespace {

IHom carrier_only(const DiffModule& m, const DiffModule& n) {
    IHom h;
    h.dim_src = m.dim;
    h.dim_tgt = n.dim;
    diffmod::HomBasis hb = hom_k_linear(m, n);
    std::vector<Vec> flat_rows;
    for (const Matrix& f : hb.basis) {
        Vec v(std::size_t(n.dim) * m.dim);
        for (std::uint32_t r = 0; r < n.dim; ++r)
            for (std::uint32_t c = 0; c < m.dim; ++c) v[std::size_t(r) * m.dim + c] = f.at(r, c);
        flat_rows.push_back(std::move(v));
    }
    h.basis = std::move(hb.basis);
    h.flat = Matrix::from_rows(flat_rows, n.dim * m.dim, m.p());
    h.coords = SpanSolver(h.flat);
    return h;
}

}  // namespace

IHom ihom(const DiffModule& m, const DiffModule& n) {
    if (!m.ring->inversive() || !m.inversive() || !n.inversive())
        throw InversivityRequired("ihom needs invertible sigma on the ring and both modules");
    IHom h = carrier_only(m, n);
    const std::uint32_t p = m.p();
    Matrix sig_src_inv = inverse(m.sigma);
    Matrix big_sigma = n.sigma.kron(sig_src_inv.transpose());
    h.carrier.ring = m.ring;
    h.carrier.dim = static_cast<std::uint32_t>(h.basis.size());
    h.carrier.sigma = h.coords.coords_cols(big_sigma * h.flat.transpose(), "ihom sigma action");
    for (std::uint32_t lam = 0; lam < m.ring->dim; ++lam) {
        Matrix big = n.act[lam].kron(Matrix::identity(m.dim, p));
        h.carrier.act.push_back(h.coords.coords_cols(big * h.flat.transpose(), "ihom k action"));
    }
    return h;
}

Vec eval(const IHom& h, const Vec& element_coords, const Vec& m) {
    if (m.size() != h.dim_src || element_coords.size() != h.basis.size())
        throw ShapeMismatch("ihom eval");
    return h.to_matrix(element_coords).apply(m);
}

Matrix ihom_map(const IHom& src, const IHom& dst, const Matrix& f, const Matrix& g) {
    if (f.cols() != dst.dim_src || f.rows() != src.dim_src ||
        g.cols() != src.dim_tgt || g.rows() != dst.dim_tgt)
        throw ShapeMismatch("ihom_map factor shapes");
    Matrix big = g.kron(f.transpose());
    return dst.coords.coords_cols(big * src.flat.transpose(), "ihom_map");
}

void verify_ses(const ShortExactSeq& s) {
    if (s.inj.rows() != s.mid.dim || s.inj.cols() != s.sub.dim ||
        s.surj.rows() != s.quo.dim || s.surj.cols() != s.mid.dim)
        throw ShapeMismatch("ses shapes");
    if (!diffmod::is_difference_linear(s.inj, s.sub, s.mid) ||
        !diffmod::is_difference_linear(s.surj, s.mid, s.quo))
        throw AxiomViolation("ses maps must be difference k-linear");
    if (rank(s.inj) != s.sub.dim) throw AxiomViolation("ses: inj not injective");
    if (rank(s.surj) != s.quo.dim) throw AxiomViolation("ses: surj not surjective");
    if (!(s.surj * s.inj).is_zero()) throw AxiomViolation("ses: surj o inj != 0");
    if (s.mid.dim != s.sub.dim + s.quo.dim) throw AxiomViolation("ses: dims do not add up");
    // surj o inj = 0 gives im(inj) inside ker(surj); dims force equality.
}

namespace {

// Surjectivity of post-composition with q on the span of `maps_b` landing in
// the span of `maps_c` (flattened rows).
bool post_compose_surjective(const Matrix& q, const std::vector<Matrix>& maps_b,
                             const std::vector<Matrix>& maps_c, std::uint32_t dim_x,
                             std::uint32_t p) {
    if (maps_c.empty()) return true;
    linfp::EchelonAccumulator acc(static_cast<std::uint32_t>(std::size_t(q.rows()) * dim_x), p);
    std::uint32_t reached = 0;
    for (const Matrix& f : maps_b) {
        Matrix qf = q * f;
        Vec v(std::size_t(q.rows()) * dim_x);
        for (std::uint32_t r = 0; r < q.rows(); ++r)
            for (std::uint32_t c = 0; c < dim_x; ++c) v[std::size_t(r) * dim_x + c] = qf.at(r, c);
        if (acc.add_row(std::move(v))) ++reached;
    }
    return reached == maps_c.size();
}

}  // namespace

ProjectivityReport internal_projectivity_witness(const DiffModule& x, const ShortExactSeq& ses) {
    verify_ses(ses);
    ProjectivityReport rep;
    diffmod::HomBasis lb = hom_k_linear(x, ses.mid);
    diffmod::HomBasis lc = hom_k_linear(x, ses.quo);
    rep.carrier_b = lb.dim();
    rep.carrier_c = lc.dim();
    rep.internal_surjective = post_compose_surjective(ses.surj, lb.basis, lc.basis, x.dim, x.p());

    diffmod::HomBasis fb = hom_diff(x, ses.mid);
    diffmod::HomBasis fc = hom_diff(x, ses.quo);
    rep.fix_b = fb.dim();
    rep.fix_c = fc.dim();
    rep.fix_surjective = post_compose_surjective(ses.surj, fb.basis, fc.basis, x.dim, x.p());
    return rep;
}

namespace {

// Ladder windows for [E (x) k, Z] with E a truncated free shift: unknowns
// z^j_{s,i} in Z for rungs j < W and layers i < D, constrained by
// z^{j+1}_{s,i+1} = sigma_Z(z^j_{s,i}). Only interior constraints are imposed,
// so the window dimension is the grid count of free cells times dim Z.
struct LadderWindow {
    Matrix basis;  // rows = solutions, ambient = S*W*D*dimZ
    std::uint32_t ambient = 0;
};

LadderWindow ladder_window(std::uint32_t s_count, std::uint32_t depth, std::uint32_t rungs,
                           const DiffModule& z, bool fixed_rungs) {
    const std::uint32_t p = z.p();
    const std::uint32_t cell = z.dim;
    const std::uint32_t ambient = s_count * rungs * depth * cell;
    auto idx = [&](std::uint32_t s, std::uint32_t j, std::uint32_t i, std::uint32_t v) {
        return ((s * rungs + j) * depth + i) * cell + v;
    };
    std::vector<Vec> eqs;
    for (std::uint32_t s = 0; s < s_count; ++s)
        for (std::uint32_t j = 0; j + 1 < rungs; ++j)
            for (std::uint32_t i = 0; i + 1 < depth; ++i)
                for (std::uint32_t r = 0; r < cell; ++r) {
                    Vec eq(ambient, 0);
                    eq[idx(s, j + 1, i + 1, r)] = 1;
                    for (std::uint32_t c = 0; c < cell; ++c) {
                        std::uint32_t v = z.sigma.at(r, c);
                        if (v) eq[idx(s, j, i, c)] = static_cast<std::uint8_t>((p - v) % p);
                    }
                    if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
                }
    if (fixed_rungs) {
        // Shift-invariant ladders: z^{j+1} = z^j on the window.
        for (std::uint32_t s = 0; s < s_count; ++s)
            for (std::uint32_t j = 0; j + 1 < rungs; ++j)
                for (std::uint32_t i = 0; i < depth; ++i)
                    for (std::uint32_t r = 0; r < cell; ++r) {
                        Vec eq(ambient, 0);
                        eq[idx(s, j + 1, i, r)] = 1;
                        eq[idx(s, j, i, r)] = static_cast<std::uint8_t>(p - 1);
                        eqs.push_back(std::move(eq));
                    }
    }
    LadderWindow w;
    w.ambient = ambient;
    Matrix sys = eqs.empty() ? Matrix(0, ambient, p) : Matrix::from_rows(eqs, ambient, p);
    w.basis = kernel_basis_matrix(sys);
    return w;
}

// Count of free grid cells: cells (j,i) not reachable as (j'+1,i'+1).
std::uint32_t grid_free_cells(std::uint32_t depth, std::uint32_t rungs) {
    return depth + rungs - 1;
}

bool window_map_surjective(const LadderWindow& wb, const LadderWindow& wc, const Matrix& q,
                           std::uint32_t blocks, std::uint32_t p) {
    // Coordinate-wise q on each cell.
    Matrix blockq = Matrix::identity(blocks, p).kron(q);
    linfp::EchelonAccumulator acc(wc.ambient, p);
    std::uint32_t reached = 0;
    for (std::uint32_t r = 0; r < wb.basis.rows(); ++r) {
        if (acc.add_row(blockq.apply(wb.basis.row_vec(r)))) ++reached;
    }
    return reached == wc.basis.rows();
}

}  // namespace

WindowedProjectivityReport windowed_shift_projectivity(std::uint32_t set_size, std::uint32_t depth,
                                                       std::uint32_t rungs, const ShortExactSeq& ses) {
    // depth 1 is the constraint-free window (single layer, no ladder edges).
    if (depth < 1 || rungs < 2) throw WindowTooSmall("windowed_shift_projectivity needs depth >= 1, rungs >= 2");
    verify_ses(ses);
    WindowedProjectivityReport rep;
    const std::uint32_t p = ses.mid.p();
    const std::uint32_t blocks = set_size * rungs * depth;

    LadderWindow wb = ladder_window(set_size, depth, rungs, ses.mid, false);
    LadderWindow wc = ladder_window(set_size, depth, rungs, ses.quo, false);
    rep.window_b = wb.basis.rows();
    rep.window_c = wc.basis.rows();
    rep.expected_window_b = set_size * grid_free_cells(depth, rungs) * ses.mid.dim;
    rep.expected_window_c = set_size * grid_free_cells(depth, rungs) * ses.quo.dim;
    rep.window_dims_match = rep.window_b == rep.expected_window_b && rep.window_c == rep.expected_window_c;
    rep.internal_surjective = window_map_surjective(wb, wc, ses.surj, blocks, p);

    LadderWindow fb = ladder_window(set_size, depth, rungs, ses.mid, true);
    LadderWindow fc = ladder_window(set_size, depth, rungs, ses.quo, true);
    rep.fix_surjective = window_map_surjective(fb, fc, ses.surj, blocks, p);
    return rep;
}

}  // namespace dhh::ihom
