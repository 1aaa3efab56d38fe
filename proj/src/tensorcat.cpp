#include "dhh/tensorcat.hpp"

#include <algorithm>

#include "dhh/errors.hpp"

namespace dhh::tensorcat {

using diffmod::hom_diff;
using diffmod::quotient_map;
using linfp::image_basis;
using linfp::inverse;
using linfp::kernel_basis_matrix;
using linfp::outer_flat;
using linfp::rank;
using linfp::row_space;
using linfp::unit_vec;
using linfp::vec_is_zero;

Vec TensorModule::pure(const Vec& m, const Vec& n) const {
    return projection.apply(outer_flat(m, n, projection.p()));
}

TensorModule tensor(const DiffModule& m, const DiffModule& n) {
    if (m.ring->p != n.ring->p || m.ring->dim != n.ring->dim)
        throw ShapeMismatch("tensor: factors over different rings");
    const std::uint32_t p = m.p();
    const std::uint32_t raw = m.dim * n.dim;
    const std::uint32_t dk = m.ring->dim;

    std::vector<Vec> gens;
    if (dk > 1) {
        for (std::uint32_t lam = 0; lam < dk; ++lam) {
            const Matrix& am = m.act[lam];
            const Matrix& an = n.act[lam];
            for (std::uint32_t i = 0; i < m.dim; ++i)
                for (std::uint32_t j = 0; j < n.dim; ++j) {
                    Vec g = linfp::vec_sub(outer_flat(am.col_vec(i), unit_vec(n.dim, j, p), p),
                                           outer_flat(unit_vec(m.dim, i, p), an.col_vec(j), p), p);
                    if (!vec_is_zero(g)) gens.push_back(std::move(g));
                }
        }
    }
    Subspace killed = gens.empty() ? Subspace::zero(raw, p)
                                   : Subspace::from_rows(Matrix::from_rows(gens, raw, p));
    QuotientMap qm = quotient_map(Subspace::full(raw, p), killed);

    TensorModule t;
    t.dim_m = m.dim;
    t.dim_n = n.dim;
    t.lifts = qm.lifts;
    if (qm.lifts.is_identity()) {
        t.projection = qm.lifts;
    } else {
        Matrix all = qm.solver.coords_cols(Matrix::identity(raw, p), "tensor projection");
        t.projection = all.sub_rows(0, qm.dim());
    }

    t.result.ring = m.ring;
    t.result.dim = qm.dim();
    for (std::uint32_t lam = 0; lam < dk; ++lam) {
        Matrix via_m = qm.induced(m.act[lam].kron(Matrix::identity(n.dim, p)));
        // Balancing makes the action through either factor agree.
        if (dk > 1) {
            Matrix via_n = qm.induced(Matrix::identity(m.dim, p).kron(n.act[lam]));
            if (via_m != via_n)
                throw AxiomViolation("tensor: induced k-action differs between factors");
        }
        t.result.act.push_back(std::move(via_m));
    }
    t.result.sigma = qm.induced(m.sigma.kron(n.sigma));
    return t;
}

Matrix tensor_map(const TensorModule& src, const TensorModule& dst, const Matrix& f, const Matrix& g) {
    if (f.cols() != src.dim_m || g.cols() != src.dim_n || f.rows() != dst.dim_m || g.rows() != dst.dim_n)
        throw ShapeMismatch("tensor_map factor shapes");
    return dst.projection * f.kron(g) * src.lifts.transpose();
}

std::uint64_t TensorPowers::tuples(std::uint32_t n) const {
    std::uint64_t t = 1;
    for (std::uint32_t i = 0; i < n; ++i) t *= a->dim();
    return t;
}

namespace {

// Right inverse of a full-row-rank matrix: P * R = id.
Matrix right_inverse(const Matrix& pm) {
    if (pm.is_identity()) return pm;
    linfp::RrefResult r = linfp::rref(pm);
    if (r.pivots.size() != pm.rows())
        throw ShapeMismatch("right_inverse: matrix does not have full row rank");
    Matrix s = pm.transpose().select_rows(r.pivots).transpose();
    Matrix sinv = inverse(s);
    Matrix out(pm.cols(), pm.rows(), pm.p());
    for (std::uint32_t j = 0; j < r.pivots.size(); ++j)
        for (std::uint32_t c = 0; c < pm.rows(); ++c) out.set(r.pivots[j], c, sinv.at(j, c));
    return out;
}

}  // namespace

TensorPowers tensor_powers(DiffAlgebraPtr a, std::uint32_t max_power, std::uint64_t dim_cap) {
    TensorPowers tp;
    tp.a = a;
    const auto& k = *a->ring();
    const std::uint32_t p = k.p;

    // A^{(x)0} = k as a module over itself.
    DiffModule t0;
    t0.ring = a->ring();
    t0.dim = k.dim;
    for (std::uint32_t i = 0; i < k.dim; ++i) t0.act.push_back(k.basis_mult_matrix(i));
    t0.sigma = k.sigma;
    tp.power.push_back(std::move(t0));
    tp.pure_cols.push_back(Matrix::from_rows({k.unit}, k.dim, p).transpose());
    // Level 0 has a single pure tensor (the unit), which spans only the unit
    // line when dim k > 1; no map is ever defined on level-0 pure values, so
    // no right inverse is kept there.
    tp.right_inv.push_back(Matrix::identity(1, p));

    for (std::uint32_t n = 1; n <= max_power; ++n) {
        const DiffModule& prev = tp.power[n - 1];
        if (std::uint64_t(prev.dim) * a->dim() > dim_cap)
            throw DegreeOverflow("tensor power " + std::to_string(n) + " exceeds dimension cap");
        TensorModule step = tensor(prev, a->module);
        std::uint64_t ntup = tp.tuples(n);
        Matrix pure(step.result.dim, static_cast<std::uint32_t>(ntup), p);
        if (step.projection.is_identity() && tp.pure_cols[n - 1].is_identity()) {
            pure = Matrix::identity(step.result.dim, p);
        } else {
            // Columns grouped by last tuple index j: pi_j * pure_cols[n-1].
            for (std::uint32_t j = 0; j < a->dim(); ++j) {
                Matrix pij(step.result.dim, prev.dim, p);
                for (std::uint32_t u = 0; u < prev.dim; ++u)
                    for (std::uint32_t r = 0; r < step.result.dim; ++r)
                        pij.set(r, u, step.projection.at(r, u * a->dim() + j));
                Matrix block = pij * tp.pure_cols[n - 1];
                for (std::uint32_t t = 0; t < block.cols(); ++t)
                    for (std::uint32_t r = 0; r < step.result.dim; ++r)
                        pure.set(r, t * a->dim() + j, block.at(r, t));
            }
        }
        tp.power.push_back(step.result);
        tp.right_inv.push_back(right_inverse(pure));
        tp.pure_cols.push_back(std::move(pure));
        tp.steps.push_back(std::move(step));
    }
    return tp;
}

Matrix TensorPowers::map_from_pure_values(std::uint32_t n, const Matrix& values) const {
    if (right_inv[n].is_identity()) return values;
    return values * right_inv[n];
}

Matrix TensorPowers::delta(std::uint32_t m, std::uint32_t i) const {
    if (m < 2 || m >= power.size() || i == 0 || i >= m)
        throw ShapeMismatch("delta indices");
    const std::uint32_t da = a->dim();
    const std::uint32_t p = a->p();
    const std::uint64_t ntup = tuples(m);
    const std::uint64_t sub_tup = tuples(m - 1);
    Matrix values(power[m - 1].dim, static_cast<std::uint32_t>(ntup), p);
    // Strides for digit positions, big-endian flat index.
    std::uint64_t stride_i = 1;
    for (std::uint32_t s = i + 1; s < m; ++s) stride_i *= da;  // stride of digit i (0-indexed)
    for (std::uint64_t t = 0; t < ntup; ++t) {
        std::uint32_t di = static_cast<std::uint32_t>(t / stride_i % da);          // digit at slot i
        std::uint32_t dim1 = static_cast<std::uint32_t>(t / (stride_i * da) % da); // digit at slot i-1
        // Flat index of the tuple with slots i-1, i merged into l.
        std::uint64_t high = t / (stride_i * da * da);
        std::uint64_t low = t % stride_i;
        const Vec& c = a->mult[dim1][di];
        for (std::uint32_t l = 0; l < da; ++l) {
            if (!c[l]) continue;
            std::uint64_t merged = (high * da + l) * stride_i + low;
            (void)sub_tup;
            for (std::uint32_t r = 0; r < power[m - 1].dim; ++r) {
                std::uint32_t v = values.at(r, static_cast<std::uint32_t>(t)) +
                                  c[l] * pure_cols[m - 1].at(r, static_cast<std::uint32_t>(merged));
                values.set(r, static_cast<std::uint32_t>(t), v % p);
            }
        }
    }
    return map_from_pure_values(m, values);
}

Enveloping enveloping(DiffAlgebraPtr a) {
    Enveloping e;
    e.base = a;
    DiffAlgebra aop = diffmod::opposite(*a);
    e.structure = tensor(a->module, aop.module);

    const std::uint32_t p = a->p();
    const std::uint32_t da = a->dim();
    const std::uint32_t q = e.structure.result.dim;

    DiffAlgebra env;
    env.module = e.structure.result;
    env.unit = e.structure.pure(a->unit, a->unit);
    env.mult.assign(q, std::vector<Vec>(q));
    // (a (x) b)(a' (x) b') = aa' (x) b'b, evaluated on lift representatives.
    for (std::uint32_t u = 0; u < q; ++u) {
        Vec lu = e.structure.lifts.row_vec(u);
        for (std::uint32_t v = 0; v < q; ++v) {
            Vec lv = e.structure.lifts.row_vec(v);
            Vec raw(std::size_t(da) * da, 0);
            for (std::uint32_t i = 0; i < da; ++i)
                for (std::uint32_t j = 0; j < da; ++j) {
                    std::uint32_t cu = lu[i * da + j];
                    if (!cu) continue;
                    for (std::uint32_t i2 = 0; i2 < da; ++i2)
                        for (std::uint32_t j2 = 0; j2 < da; ++j2) {
                            std::uint32_t cv = lv[i2 * da + j2];
                            if (!cv) continue;
                            std::uint32_t c = cu * cv % p;
                            Vec prod = outer_flat(a->mult[i][i2], a->mult[j2][j], p);
                            for (std::size_t x = 0; x < raw.size(); ++x)
                                raw[x] = static_cast<std::uint8_t>((raw[x] + c * prod[x]) % p);
                        }
                }
            env.mult[u][v] = e.structure.projection.apply(raw);
        }
    }
    e.env = std::make_shared<const DiffAlgebra>(std::move(env));
    return e;
}

std::vector<Matrix> Enveloping::actions_on(const Bimodule& m) const {
    std::vector<Matrix> acts;
    const std::uint32_t da = base->dim();
    for (std::uint32_t u = 0; u < env->dim(); ++u) {
        Vec lift = structure.lifts.row_vec(u);
        Matrix op(m.dim(), m.dim(), m.p());
        for (std::uint32_t i = 0; i < da; ++i)
            for (std::uint32_t j = 0; j < da; ++j) {
                std::uint32_t c = lift[i * da + j];
                if (c) op = op + (m.left[i] * m.right[j]).scaled(c);
            }
        acts.push_back(std::move(op));
    }
    return acts;
}

UniversalCheckReport universal_check(const DiffModule& m, const DiffModule& n, const DiffModule& pm) {
    const std::uint32_t p = m.p();
    const std::uint32_t raw = m.dim * n.dim;
    TensorModule t = tensor(m, n);

    // Side (a): T : M (x) N -> P additive with
    //   T vanishing on the balancing span,
    //   T (act_M(lambda) (x) 1) = act_P(lambda) T,
    //   T (sigma_M (x) sigma_N) = sigma_P T.
    const std::uint32_t nunk = pm.dim * raw;
    std::vector<Vec> eqs;
    auto add_commutation = [&](const Matrix& a, const Matrix& b) {
        for (std::uint32_t r = 0; r < pm.dim; ++r)
            for (std::uint32_t c = 0; c < raw; ++c) {
                Vec eq(nunk, 0);
                for (std::uint32_t j = 0; j < raw; ++j)
                    eq[r * raw + j] = static_cast<std::uint8_t>((eq[r * raw + j] + a.at(j, c)) % p);
                for (std::uint32_t j = 0; j < pm.dim; ++j)
                    eq[j * raw + c] = static_cast<std::uint8_t>((eq[j * raw + c] + p - b.at(r, j)) % p);
                if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
            }
    };
    for (std::uint32_t lam = 0; lam < m.ring->dim; ++lam)
        add_commutation(m.act[lam].kron(Matrix::identity(n.dim, p)), pm.act[lam]);
    add_commutation(m.sigma.kron(n.sigma), pm.sigma);
    // Balancing span annihilation: T g = 0 for every generator row g.
    Matrix killed = kernel_basis_matrix(t.projection);  // = balancing span
    for (std::uint32_t g = 0; g < killed.rows(); ++g)
        for (std::uint32_t r = 0; r < pm.dim; ++r) {
            Vec eq(nunk, 0);
            for (std::uint32_t c = 0; c < raw; ++c) eq[r * raw + c] = killed.at(g, c);
            if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
        }
    Matrix sys = Matrix::from_rows(eqs, nunk, p);
    Matrix sol = kernel_basis_matrix(sys);

    UniversalCheckReport rep;
    rep.dim_balanced = sol.rows();
    rep.dim_hom = hom_diff(t.result, pm).dim();
    rep.dims_equal = rep.dim_balanced == rep.dim_hom;

    // Explicit factorization of each balanced basis map through the tensor.
    rep.factorization_ok = true;
    for (std::uint32_t s = 0; s < sol.rows(); ++s) {
        Matrix tmat(pm.dim, raw, p);
        for (std::uint32_t r = 0; r < pm.dim; ++r)
            for (std::uint32_t c = 0; c < raw; ++c) tmat.set(r, c, sol.at(s, r * raw + c));
        Matrix f = tmat * t.lifts.transpose();
        if (f * t.projection != tmat || !diffmod::is_difference_linear(f, t.result, pm)) {
            rep.factorization_ok = false;
            break;
        }
    }
    return rep;
}

UnitIso unit_iso(const DiffModule& m, const TensorModule& mk) {
    const std::uint32_t p = m.p();
    const std::uint32_t dk = m.ring->dim;
    if (mk.dim_m != m.dim || mk.dim_n != dk) throw ShapeMismatch("unit_iso shapes");
    // m (x) lambda -> act(lambda) m on raw coordinates.
    Matrix values(m.dim, m.dim * dk, p);
    for (std::uint32_t i = 0; i < m.dim; ++i)
        for (std::uint32_t j = 0; j < dk; ++j) {
            Vec v = m.act[j].col_vec(i);
            for (std::uint32_t r = 0; r < m.dim; ++r) values.set(r, i * dk + j, v[r]);
        }
    UnitIso u;
    u.to_module = values * mk.lifts.transpose();
    Matrix back(mk.result.dim, m.dim, p);
    for (std::uint32_t i = 0; i < m.dim; ++i) {
        Vec c = mk.pure(unit_vec(m.dim, i, p), m.ring->unit);
        for (std::uint32_t r = 0; r < mk.result.dim; ++r) back.set(r, i, c[r]);
    }
    u.from_module = back;
    u.is_iso = (u.to_module * u.from_module).is_identity() && (u.from_module * u.to_module).is_identity();
    u.difference_linear = diffmod::is_difference_linear(u.to_module, mk.result, m) &&
                          diffmod::is_difference_linear(u.from_module, m, mk.result);
    return u;
}

AssociatorReport associator(const TensorModule& ab, const TensorModule& ab_c,
                            const TensorModule& bc, const TensorModule& a_bc,
                            std::uint32_t dim_a, std::uint32_t dim_b, std::uint32_t dim_c) {
    const std::uint32_t p = ab.result.p();
    const std::uint64_t ntrip = std::uint64_t(dim_a) * dim_b * dim_c;
    Matrix sp_l(ab_c.result.dim, static_cast<std::uint32_t>(ntrip), p);
    Matrix sp_r(a_bc.result.dim, static_cast<std::uint32_t>(ntrip), p);
    std::uint32_t col = 0;
    for (std::uint32_t i = 0; i < dim_a; ++i)
        for (std::uint32_t j = 0; j < dim_b; ++j)
            for (std::uint32_t l = 0; l < dim_c; ++l, ++col) {
                Vec left = ab_c.pure(ab.pure(unit_vec(dim_a, i, p), unit_vec(dim_b, j, p)),
                                     unit_vec(dim_c, l, p));
                Vec right = a_bc.pure(unit_vec(dim_a, i, p),
                                      bc.pure(unit_vec(dim_b, j, p), unit_vec(dim_c, l, p)));
                for (std::uint32_t r = 0; r < sp_l.rows(); ++r) sp_l.set(r, col, left[r]);
                for (std::uint32_t r = 0; r < sp_r.rows(); ++r) sp_r.set(r, col, right[r]);
            }
    AssociatorReport rep;
    rep.map = sp_r * right_inverse(sp_l);
    rep.is_iso = ab_c.result.dim == a_bc.result.dim && rank(rep.map) == ab_c.result.dim;
    return rep;
}

}  // namespace dhh::tensorcat
