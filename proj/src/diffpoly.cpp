#include "dhh/diffpoly.hpp"

#include <algorithm>
#include <numeric>

#include "dhh/errors.hpp"

namespace dhh::diffpoly {

using linfp::image_basis;
using linfp::kernel_basis;
using linfp::kernel_basis_matrix;
using linfp::rank;
using linfp::row_space;
using linfp::vec_is_zero;

std::optional<std::uint32_t> TruncRing::mono_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint8_t> e(nvars());
    std::uint32_t deg = 0;
    for (std::uint32_t v = 0; v < nvars(); ++v) {
        e[v] = static_cast<std::uint8_t>(monos[a][v] + monos[b][v]);
        deg += e[v];
    }
    if (deg > degree) return std::nullopt;
    return mono_index.at(e);
}

std::optional<std::uint32_t> TruncRing::mono_sigma(std::uint32_t m) const {
    std::vector<std::uint8_t> e(nvars(), 0);
    for (std::uint32_t f = 0; f < families; ++f) {
        if (monos[m][var(f, order)]) return std::nullopt;  // top-index variable maps to 0
        for (std::uint32_t i = 0; i < order; ++i) e[var(f, i + 1)] = monos[m][var(f, i)];
    }
    return mono_index.at(e);
}

std::uint32_t TruncRing::mono_degree(std::uint32_t m) const {
    return std::accumulate(monos[m].begin(), monos[m].end(), 0u);
}

bool TruncRing::mono_interior(std::uint32_t m) const {
    if (mono_degree(m) >= degree) return false;
    for (std::uint32_t f = 0; f < families; ++f)
        if (monos[m][var(f, order)]) return false;
    return true;
}

Vec TruncRing::mul_vec(const Vec& a, const Vec& b) const {
    const std::uint32_t p = base->p;
    const std::uint32_t dk = base->dim;
    Vec r(dim(), 0);
    for (std::uint32_t ma = 0; ma < mono_count(); ++ma)
        for (std::uint32_t i = 0; i < dk; ++i) {
            std::uint32_t ca = a[coord(ma, i)];
            if (!ca) continue;
            for (std::uint32_t mb = 0; mb < mono_count(); ++mb) {
                auto mc = mono_mul(ma, mb);
                if (!mc) continue;
                for (std::uint32_t j = 0; j < dk; ++j) {
                    std::uint32_t cb = b[coord(mb, j)];
                    if (!cb) continue;
                    std::uint32_t c = ca * cb % p;
                    const Vec& kk = base->mult[i][j];
                    for (std::uint32_t l = 0; l < dk; ++l)
                        r[coord(*mc, l)] = static_cast<std::uint8_t>((r[coord(*mc, l)] + c * kk[l]) % p);
                }
            }
        }
    return r;
}

Matrix TruncRing::mult_matrix(const Vec& a) const {
    Matrix m(dim(), dim(), base->p);
    for (std::uint32_t mb = 0; mb < mono_count(); ++mb)
        for (std::uint32_t j = 0; j < base->dim; ++j) {
            Vec e(dim(), 0);
            e[coord(mb, j)] = 1;
            Vec col = mul_vec(a, e);
            for (std::uint32_t r = 0; r < dim(); ++r)
                if (col[r]) m.set(r, coord(mb, j), col[r]);
        }
    return m;
}

Vec TruncRing::generator(std::uint32_t family, std::uint32_t idx) const {
    std::vector<std::uint8_t> e(nvars(), 0);
    e[var(family, idx)] = 1;
    Vec v(dim(), 0);
    const Vec& u = base->unit;
    std::uint32_t m = mono_index.at(e);
    for (std::uint32_t i = 0; i < base->dim; ++i) v[coord(m, i)] = u[i];
    return v;
}

TruncRing trunc_ring(DiffRingPtr k, std::uint32_t order, std::uint32_t degree, std::uint32_t families) {
    if (order < 1 || degree < 1) throw WindowTooSmall("trunc_ring needs order, degree >= 1");
    TruncRing r;
    r.base = std::move(k);
    r.families = families;
    r.order = order;
    r.degree = degree;
    // Graded-lex enumeration of exponent vectors with total degree <= cap.
    std::vector<std::uint8_t> cur(r.nvars(), 0);
    std::vector<std::vector<std::uint8_t>> all;
    auto rec = [&](auto&& self, std::uint32_t v, std::uint32_t left) -> void {
        if (v == r.nvars()) {
            all.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[v] = static_cast<std::uint8_t>(e);
            self(self, v + 1, left - e);
        }
        cur[v] = 0;
    };
    rec(rec, 0, degree);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        std::uint32_t da = std::accumulate(a.begin(), a.end(), 0u);
        std::uint32_t db = std::accumulate(b.begin(), b.end(), 0u);
        if (da != db) return da < db;
        return a < b;
    });
    r.monos = std::move(all);
    for (std::uint32_t i = 0; i < r.monos.size(); ++i) r.mono_index[r.monos[i]] = i;

    const std::uint32_t p = r.base->p;
    const std::uint32_t dk = r.base->dim;
    Matrix sg(r.dim(), r.dim(), p);
    for (std::uint32_t m = 0; m < r.mono_count(); ++m) {
        auto sm = r.mono_sigma(m);
        if (!sm) continue;
        for (std::uint32_t i = 0; i < dk; ++i) {
            Vec col = r.base->sigma.col_vec(i);
            for (std::uint32_t l = 0; l < dk; ++l)
                if (col[l]) sg.set(r.coord(*sm, l), r.coord(m, i), col[l]);
        }
    }
    r.sigma = std::move(sg);
    return r;
}

Matrix derivation_matrix(const TruncRing& r1, std::uint32_t mono) {
    // d(x^nu) = sum_j nu_j x^{nu - e_j} p_j with p_j = sigma^j(p_0); columns
    // index the free coordinates of p_0.
    const std::uint32_t p = r1.base->p;
    Matrix out(r1.dim(), r1.dim(), p);
    std::vector<Matrix> sig_pow;
    sig_pow.push_back(Matrix::identity(r1.dim(), p));
    for (std::uint32_t j = 1; j <= r1.order; ++j) sig_pow.push_back(r1.sigma * sig_pow.back());
    for (std::uint32_t j = 0; j <= r1.order; ++j) {
        std::uint32_t e = r1.monos[mono][r1.var(0, j)];
        if (e % p == 0) continue;
        std::vector<std::uint8_t> rest = r1.monos[mono];
        rest[r1.var(0, j)] -= 1;
        std::uint32_t rest_idx = r1.mono_index.at(rest);
        Vec rest_vec(r1.dim(), 0);
        for (std::uint32_t i = 0; i < r1.base->dim; ++i)
            rest_vec[r1.coord(rest_idx, i)] = r1.base->unit[i];
        out = out + (r1.mult_matrix(rest_vec) * sig_pow[j]).scaled(e % p);
    }
    return out;
}

DerivationSolveReport derivation_solve(DiffRingPtr k, std::uint32_t order, std::uint32_t degree) {
    if (order < 2 || degree < 2) throw WindowTooSmall("derivation_solve needs order, degree >= 2");
    TruncRing r1 = trunc_ring(k, order, degree, 1);
    DerivationSolveReport rep;
    rep.dim = r1.dim();
    rep.classical_dim = (order + 1) * r1.dim();
    rep.sigma_compat_verified = true;
    for (std::uint32_t m = 0; m < r1.mono_count(); ++m) {
        if (!r1.mono_interior(m)) continue;
        auto sm = r1.mono_sigma(m);
        Matrix lhs = r1.sigma * derivation_matrix(r1, m);
        Matrix rhs = derivation_matrix(r1, *sm);
        if (lhs != rhs) rep.sigma_compat_verified = false;
    }
    return rep;
}

ResolutionReport resolution_maps(DiffRingPtr k, std::uint32_t order, std::uint32_t degree) {
    if (order < 1 || degree < 2) throw WindowTooSmall("resolution_maps needs order >= 1, degree >= 2");
    TruncRing r2 = trunc_ring(k, order, degree, 2);  // k{x,y}
    TruncRing r1 = trunc_ring(k, order, degree, 1);  // k{x}
    const std::uint32_t p = k->p;
    const std::uint32_t blocks = order + 1;
    const std::uint32_t dr = r2.dim();

    std::vector<Matrix> mz;  // multiplication by z_i = x_i - y_i
    for (std::uint32_t i = 0; i < blocks; ++i) {
        Vec z = linfp::vec_sub(r2.generator(0, i), r2.generator(1, i), p);
        mz.push_back(r2.mult_matrix(z));
    }

    ResolutionReport rep;
    rep.f = Matrix(dr, blocks * dr, p);
    for (std::uint32_t i = 0; i < blocks; ++i)
        for (std::uint32_t r = 0; r < dr; ++r)
            for (std::uint32_t c = 0; c < dr; ++c)
                if (mz[i].at(r, c)) rep.f.set(r, i * dr + c, mz[i].at(r, c));

    rep.g = Matrix(blocks * dr, blocks * blocks * dr, p);
    for (std::uint32_t i = 0; i < blocks; ++i)
        for (std::uint32_t j = 0; j < blocks; ++j) {
            std::uint32_t src = (i * blocks + j) * dr;
            for (std::uint32_t r = 0; r < dr; ++r)
                for (std::uint32_t c = 0; c < dr; ++c) {
                    if (mz[j].at(r, c))
                        rep.g.set(i * dr + r, src + c,
                                  (rep.g.at(i * dr + r, src + c) + mz[j].at(r, c)) % p);
                    if (mz[i].at(r, c))
                        rep.g.set(j * dr + r, src + c,
                                  (rep.g.at(j * dr + r, src + c) + p - mz[i].at(r, c)) % p);
                }
        }

    // eps: x,y -> x.
    rep.eps = Matrix(r1.dim(), dr, p);
    for (std::uint32_t m = 0; m < r2.mono_count(); ++m) {
        std::vector<std::uint8_t> e(r1.nvars(), 0);
        for (std::uint32_t idx = 0; idx <= order; ++idx)
            e[r1.var(0, idx)] = static_cast<std::uint8_t>(r2.monos[m][r2.var(0, idx)] +
                                                          r2.monos[m][r2.var(1, idx)]);
        std::uint32_t target = r1.mono_index.at(e);
        for (std::uint32_t i = 0; i < k->dim; ++i)
            rep.eps.set(r1.coord(target, i), r2.coord(m, i), 1);
    }

    rep.fg_zero = (rep.f * rep.g).is_zero();
    rep.eps_f_zero = (rep.eps * rep.f).is_zero();

    Matrix kf = kernel_basis_matrix(rep.f);
    Matrix ig = row_space(rep.g.transpose());
    rep.ker_f_dim = kf.rows();
    rep.im_g_dim = ig.rows();

    // Interior coordinates: components (i, mono) with the product by any z
    // still inside the window.
    std::vector<std::uint32_t> boundary;
    for (std::uint32_t i = 0; i < blocks; ++i)
        for (std::uint32_t m = 0; m < r2.mono_count(); ++m)
            if (r2.mono_degree(m) >= degree)
                for (std::uint32_t l = 0; l < k->dim; ++l)
                    boundary.push_back(i * dr + r2.coord(m, l));
    auto intersect_coordinate = [&](const Matrix& basis) {
        if (basis.rows() == 0) return basis;
        Matrix bb(basis.rows(), static_cast<std::uint32_t>(boundary.size()), p);
        for (std::uint32_t r = 0; r < basis.rows(); ++r)
            for (std::uint32_t c = 0; c < boundary.size(); ++c) bb.set(r, c, basis.at(r, boundary[c]));
        Matrix coeff = kernel_basis_matrix(bb.transpose());
        return row_space(coeff * basis);
    };
    Matrix kfi = intersect_coordinate(kf);
    Matrix igi = intersect_coordinate(ig);
    rep.interior_ker_dim = kfi.rows();
    rep.interior_im_dim = igi.rows();
    rep.interior_equal = kfi == igi;
    return rep;
}

namespace {

// Ladder window for hom objects out of a free module of rank `blocks` over
// k{x,y}, with values in k{t}: rungs n < rungs, block values alpha^n_i, and
// interior ladder constraints alpha^{n+1}_{i+1} = sigma_t(alpha^n_i) for
// rank-1 case the single chain alpha^{n+1} = sigma_t(alpha^n).
Matrix ladder_window_basis(const TruncRing& r1, std::uint32_t blocks, std::uint32_t rungs,
                           bool shift_block_index) {
    const std::uint32_t p = r1.base->p;
    const std::uint32_t cell = r1.dim();
    const std::uint32_t ambient = rungs * blocks * cell;
    auto idx = [&](std::uint32_t n, std::uint32_t i, std::uint32_t v) {
        return (n * blocks + i) * cell + v;
    };
    std::vector<Vec> eqs;
    for (std::uint32_t n = 0; n + 1 < rungs; ++n)
        for (std::uint32_t i = 0; i < blocks; ++i) {
            std::uint32_t ti = shift_block_index ? i + 1 : i;
            if (shift_block_index && ti >= blocks) continue;
            for (std::uint32_t r = 0; r < cell; ++r) {
                Vec eq(ambient, 0);
                eq[idx(n + 1, ti, r)] = 1;
                for (std::uint32_t c = 0; c < cell; ++c) {
                    std::uint32_t v = r1.sigma.at(r, c);
                    if (v) eq[idx(n, i, c)] = static_cast<std::uint8_t>((p - v) % p);
                }
                if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
            }
        }
    Matrix sys = eqs.empty() ? Matrix(0, ambient, p) : Matrix::from_rows(eqs, ambient, p);
    return kernel_basis_matrix(sys);
}

}  // namespace

HHWindowReport hh_windowed(DiffRingPtr k, std::uint32_t order, std::uint32_t degree) {
    if (order < 1 || degree < 2) throw WindowTooSmall("hh_windowed needs order >= 1, degree >= 2");
    TruncRing r2 = trunc_ring(k, order, degree, 2);
    TruncRing r1 = trunc_ring(k, order, degree, 1);
    const std::uint32_t p = k->p;
    const std::uint32_t blocks = order + 1;
    const std::uint32_t rungs = order + 1;  // Z-window of size 2*order+1

    // Action of z_i on k{t}: substitute x,y -> t, then multiply.
    Matrix subst(r1.dim(), r2.dim(), p);
    for (std::uint32_t m = 0; m < r2.mono_count(); ++m) {
        std::vector<std::uint8_t> e(r1.nvars(), 0);
        std::uint32_t deg = 0;
        for (std::uint32_t idx = 0; idx <= order; ++idx) {
            e[r1.var(0, idx)] = static_cast<std::uint8_t>(r2.monos[m][r2.var(0, idx)] +
                                                          r2.monos[m][r2.var(1, idx)]);
            deg += e[r1.var(0, idx)];
        }
        std::uint32_t target = r1.mono_index.at(e);
        for (std::uint32_t i = 0; i < k->dim; ++i)
            subst.set(r1.coord(target, i), r2.coord(m, i), 1);
    }
    HHWindowReport rep;
    std::vector<Matrix> az;
    bool all_zero = true;
    for (std::uint32_t i = 0; i < blocks; ++i) {
        Vec z = linfp::vec_sub(r2.generator(0, i), r2.generator(1, i), p);
        Matrix azi = r1.mult_matrix(subst.apply(z));
        if (!azi.is_zero()) all_zero = false;
        az.push_back(std::move(azi));
    }
    rep.fstar_zero = all_zero;
    rep.gstar_zero = all_zero;

    // H0 window: single chain gamma^{n+1} = sigma(gamma^n); H1 window: grid.
    Matrix h0 = ladder_window_basis(r1, 1, rungs, false);
    Matrix h1 = ladder_window_basis(r1, blocks, rungs, true);

    // f*: rungwise gamma -> (az_i gamma)_i; its rank on the H0 window.
    const std::uint32_t cell = r1.dim();
    Matrix fstar(rungs * blocks * cell, rungs * cell, p);
    for (std::uint32_t n = 0; n < rungs; ++n)
        for (std::uint32_t i = 0; i < blocks; ++i)
            for (std::uint32_t r = 0; r < cell; ++r)
                for (std::uint32_t c = 0; c < cell; ++c)
                    if (az[i].at(r, c)) fstar.set((n * blocks + i) * cell + r, n * cell + c, az[i].at(r, c));
    Matrix fstar_on_h0 = fstar * h0.transpose();
    std::uint32_t rank_fstar = rank(fstar_on_h0);

    rep.hh0 = h0.rows() - rank_fstar;
    rep.expected0 = r1.dim();
    // g* vanishes on the window (az = 0), so HH^1 = the H1 window modulo im f*.
    rep.hh1 = h1.rows() - rank_fstar;
    rep.expected1 = (2 * order + 1) * r1.dim();
    return rep;
}

bool envelope_window_iso(DiffRingPtr k, std::uint32_t order, std::uint32_t degree) {
    TruncRing r2 = trunc_ring(k, order, degree, 2);
    TruncRing r1 = trunc_ring(k, order, degree, 1);
    const std::uint32_t p = k->p;
    // Pairs (nu, mu) with deg nu + deg mu <= degree, mapped to x^nu y^mu.
    std::vector<Vec> cols;
    for (std::uint32_t a = 0; a < r1.mono_count(); ++a)
        for (std::uint32_t b = 0; b < r1.mono_count(); ++b) {
            if (r1.mono_degree(a) + r1.mono_degree(b) > degree) continue;
            std::vector<std::uint8_t> e(r2.nvars(), 0);
            for (std::uint32_t idx = 0; idx <= order; ++idx) {
                e[r2.var(0, idx)] = r1.monos[a][r1.var(0, idx)];
                e[r2.var(1, idx)] = r1.monos[b][r1.var(0, idx)];
            }
            Vec col(r2.mono_count(), 0);
            col[r2.mono_index.at(e)] = 1;
            cols.push_back(std::move(col));
        }
    Matrix m = Matrix::from_rows(cols, r2.mono_count(), p).transpose();
    return cols.size() == r2.mono_count() && rank(m) == r2.mono_count();
}

}  // namespace dhh::diffpoly
