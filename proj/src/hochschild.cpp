#include "dhh/hochschild.hpp"

#include <cstdlib>

#include "dhh/errors.hpp"

namespace dhh::hochschild {

using diffmod::hom_diff;
using diffmod::hom_k_linear;
using diffmod::subquotient_module;
using ihom::ihom;
using linfp::image_basis;
using linfp::kernel_basis;
using linfp::rank;
using linfp::vec_is_zero;
using tensorcat::tensor_powers;

std::uint64_t default_dim_cap() {
    if (const char* env = std::getenv("DHH_DIM_CAP")) {
        std::uint64_t v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return std::uint64_t{1} << 20;
}

void verify_complex(const CochainComplex& c) {
    for (std::uint32_t n = 0; n < c.d.size(); ++n) {
        const Matrix& dn = c.d[n];
        if (dn.cols() != c.terms[n].dim || dn.rows() != c.terms[n + 1].dim)
            throw ShapeMismatch("complex: differential shape at degree " + std::to_string(n));
        if (!diffmod::is_difference_linear(dn, c.terms[n], c.terms[n + 1]))
            throw AxiomViolation("complex: d^" + std::to_string(n) + " is not difference k-linear");
        if (n + 1 < c.d.size() && !(c.d[n + 1] * dn).is_zero())
            throw AxiomViolation("complex: d^" + std::to_string(n + 1) + " o d^" + std::to_string(n) + " != 0");
    }
}

namespace {

// Full-space matrix of one face Hom(X_n, M) -> Hom(X_{n+1}, M), flat indices
// (r, u) -> r * dim(X_n) + u.
Matrix face_full(const Bimodule& m, const TensorPowers& tp, std::uint32_t n, std::uint32_t i) {
    const std::uint32_t p = m.p();
    const std::uint32_t da = tp.a->dim();
    const DiffModule& xn = tp.power[n];
    const DiffModule& xn1 = tp.power[n + 1];
    if (i >= 1 && i <= n) {
        // Precomposition with the contraction of tensor slots i-1, i.
        return Matrix::identity(m.dim(), p).kron(tp.delta(n + 1, i).transpose());
    }
    const Matrix& pmat = tp.pure_cols[n];
    const Matrix& rinv = tp.right_inv[n + 1];
    const std::uint64_t sub = tp.tuples(n);
    Matrix out(m.dim() * xn1.dim, m.dim() * xn.dim, p);
    if (i == 0) {
        // (f) -> (a_0 (x) w -> a_0 f(w)): sum over the leading tuple digit.
        for (std::uint32_t i0 = 0; i0 < da; ++i0) {
            Matrix block = rinv.sub_rows(static_cast<std::uint32_t>(i0 * sub), static_cast<std::uint32_t>(sub));
            Matrix y = pmat.is_identity() ? block : pmat * block;
            out = out + m.left[i0].kron(y.transpose());
        }
        return out;
    }
    if (i == n + 1) {
        // (f) -> (w (x) a_n -> f(w) a_n): sum over the trailing tuple digit.
        for (std::uint32_t j = 0; j < da; ++j) {
            std::vector<std::uint32_t> idx;
            idx.reserve(static_cast<std::size_t>(sub));
            for (std::uint64_t l = 0; l < sub; ++l) idx.push_back(static_cast<std::uint32_t>(l * da + j));
            Matrix block = rinv.select_rows(idx);
            Matrix y = pmat.is_identity() ? block : pmat * block;
            out = out + m.right[j].kron(y.transpose());
        }
        return out;
    }
    throw ShapeMismatch("face index out of range");
}

Matrix restrict_to_carriers(const Matrix& full, const IHom& src, const IHom& tgt, const char* what) {
    if (src.flat.is_identity() && tgt.flat.is_identity()) return full;
    Matrix cols = full * src.flat.transpose();
    return tgt.coords.coords_cols(cols, what);
}

}  // namespace

Matrix hochschild_face(const Bimodule& m, const TensorPowers& powers, const std::vector<IHom>& carriers,
                       std::uint32_t n, std::uint32_t i) {
    Matrix full = face_full(m, powers, n, i);
    return restrict_to_carriers(full, carriers[n], carriers[n + 1], "hochschild face");
}

HochschildData hochschild_complex(DiffAlgebraPtr a, const Bimodule& m, std::uint32_t max_degree,
                                  std::uint64_t dim_cap) {
    if (max_degree < 1) throw ShapeMismatch("hochschild_complex: max_degree >= 1");
    if (!a->ring()->inversive() || !a->module.inversive() || !m.module.inversive())
        throw InversivityRequired("hochschild_complex needs an inversive instance");
    const std::uint32_t p = m.p();
    const std::uint32_t top = max_degree + 1;

    HochschildData hd;
    hd.powers = tensor_powers(a, top, dim_cap);
    for (std::uint32_t n = 0; n <= top; ++n) {
        if (std::uint64_t(hd.powers.power[n].dim) * m.dim() > dim_cap)
            throw DegreeOverflow("carrier dimension exceeds cap at degree " + std::to_string(n));
        hd.carriers.push_back(ihom(hd.powers.power[n], m.module));
        hd.complex.terms.push_back(hd.carriers.back().carrier);
    }
    for (std::uint32_t n = 0; n < top; ++n) {
        Matrix dn(m.dim() * hd.powers.power[n + 1].dim, m.dim() * hd.powers.power[n].dim, p);
        for (std::uint32_t i = 0; i <= n + 1; ++i) {
            Matrix f = face_full(m, hd.powers, n, i);
            dn = (i % 2 == 0) ? dn + f : dn - f;
        }
        hd.complex.d.push_back(restrict_to_carriers(dn, hd.carriers[n], hd.carriers[n + 1], "hochschild d"));
    }
    hd.complex.provenance = Provenance::Hochschild;
    verify_complex(hd.complex);
    return hd;
}

std::vector<std::uint32_t> CohomologyReport::dims() const {
    std::vector<std::uint32_t> v;
    for (const auto& d : degrees) v.push_back(d.dim);
    return v;
}

CohomologyReport cohomology(const CochainComplex& c) {
    CohomologyReport rep;
    const std::uint32_t p = c.terms.front().p();
    for (std::uint32_t n = 0; n < c.d.size(); ++n) {
        Subspace z = kernel_basis(c.d[n]);
        Subspace b = (n == 0) ? Subspace::zero(c.terms[0].dim, p) : image_basis(c.d[n - 1]);
        CohomologyDegree deg;
        deg.h = subquotient_module(z, b, c.terms[n]);
        deg.dim = deg.h.module.dim;
        deg.fix_dim = diffmod::fix_module(deg.h.module).dim();
        deg.coinv_dim = diffmod::coinv_module(deg.h.module).dim();
        rep.degrees.push_back(std::move(deg));
    }
    return rep;
}

BarComplex bar_complex(DiffAlgebraPtr a, std::uint32_t max_degree, std::uint64_t dim_cap) {
    BarComplex b;
    b.powers = tensor_powers(a, max_degree + 2, dim_cap);
    const std::uint32_t p = a->p();
    const std::uint32_t da = a->dim();
    for (std::uint32_t n = 0; n <= max_degree; ++n) b.dims.push_back(b.powers.power[n + 2].dim);
    for (std::uint32_t n = 0; n <= max_degree; ++n) {
        Matrix dn(b.powers.power[n + 1].dim, b.powers.power[n + 2].dim, p);
        for (std::uint32_t i = 0; i <= n; ++i) {
            Matrix f = b.powers.delta(n + 2, i + 1);
            dn = (i % 2 == 0) ? dn + f : dn - f;
        }
        b.d.push_back(std::move(dn));
    }
    b.mu = b.d[0];
    for (std::uint32_t n = 0; n <= max_degree; ++n) {
        // s_n : 1 (x) - on pure tuples of level n+1.
        const std::uint64_t ntup = b.powers.tuples(n + 1);
        const std::uint64_t stride = ntup;  // prepended digit is the most significant
        Matrix values(b.powers.power[n + 2].dim, static_cast<std::uint32_t>(ntup), p);
        for (std::uint64_t t = 0; t < ntup; ++t)
            for (std::uint32_t l = 0; l < da; ++l) {
                std::uint32_t u = a->unit[l];
                if (!u) continue;
                std::uint64_t pre = l * stride + t;
                for (std::uint32_t r = 0; r < values.rows(); ++r) {
                    std::uint32_t v = values.at(r, static_cast<std::uint32_t>(t)) +
                                      u * b.powers.pure_cols[n + 2].at(r, static_cast<std::uint32_t>(pre));
                    values.set(r, static_cast<std::uint32_t>(t), v % p);
                }
            }
        b.s.push_back(b.powers.map_from_pure_values(n + 1, values));
    }
    return b;
}

BarChecks verify_bar(const BarComplex& b) {
    BarChecks ck;
    ck.dd_zero = true;
    for (std::uint32_t n = 0; n + 1 < b.d.size(); ++n)
        if (!(b.d[n] * b.d[n + 1]).is_zero()) ck.dd_zero = false;
    ck.homotopy = true;
    for (std::uint32_t n = 0; n + 1 < b.d.size(); ++n) {
        Matrix lhs = b.d[n + 1] * b.s[n + 1] + b.s[n] * b.d[n];
        if (!lhs.is_identity()) ck.homotopy = false;
    }
    ck.augmentation = (b.mu * b.s[0]).is_identity();
    return ck;
}

Subspace hh0_direct(const diffmod::DiffAlgebra& a, const Bimodule& m) {
    if (!m.module.inversive()) throw InversivityRequired("hh0_direct needs invertible sigma_M");
    const std::uint32_t p = m.p();
    const std::uint32_t dm = m.dim();
    Matrix power = Matrix::identity(dm, p);
    std::vector<linfp::Vec> eqs;
    Subspace current = Subspace::full(dm, p);
    std::uint32_t steps = 0;
    while (true) {
        for (std::uint32_t j = 0; j < a.dim(); ++j) {
            Matrix row_block = (m.left[j] - m.right[j]) * power;
            for (std::uint32_t r = 0; r < dm; ++r) eqs.push_back(row_block.row_vec(r));
        }
        Subspace next = kernel_basis(Matrix::from_rows(eqs, dm, p));
        bool stable = next.dim() == current.dim();
        current = std::move(next);
        power = m.module.sigma * power;
        ++steps;
        if ((stable && steps > 1) || power.is_identity() || steps > 4 * dm + 4) break;
    }
    return current;
}

DerivationReport derivations(const diffmod::DiffAlgebra& a, const Bimodule& m) {
    if (!a.ring()->inversive() || !a.module.inversive() || !m.module.inversive())
        throw InversivityRequired("derivations needs an inversive instance");
    const std::uint32_t p = m.p();
    const std::uint32_t da = a.dim(), dm = m.dim();
    const std::uint32_t nunk = dm * da;

    // k-linearity plus the Leibniz rule on basis pairs, solved jointly.
    std::vector<linfp::Vec> eqs;
    for (std::uint32_t lam = 0; lam < a.ring()->dim; ++lam) {
        const Matrix& asrc = a.module.act[lam];
        const Matrix& atgt = m.module.act[lam];
        for (std::uint32_t r = 0; r < dm; ++r)
            for (std::uint32_t c = 0; c < da; ++c) {
                linfp::Vec eq(nunk, 0);
                for (std::uint32_t j = 0; j < da; ++j)
                    eq[r * da + j] = static_cast<std::uint8_t>((eq[r * da + j] + asrc.at(j, c)) % p);
                for (std::uint32_t j = 0; j < dm; ++j)
                    eq[j * da + c] = static_cast<std::uint8_t>((eq[j * da + c] + p - atgt.at(r, j)) % p);
                if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
            }
    }
    for (std::uint32_t i = 0; i < da; ++i)
        for (std::uint32_t j = 0; j < da; ++j) {
            const linfp::Vec& prod = a.mult[i][j];
            for (std::uint32_t r = 0; r < dm; ++r) {
                // f(a_i a_j) - a_i f(a_j) - f(a_i) a_j = 0, row r.
                linfp::Vec eq(nunk, 0);
                for (std::uint32_t l = 0; l < da; ++l)
                    eq[r * da + l] = static_cast<std::uint8_t>((eq[r * da + l] + prod[l]) % p);
                for (std::uint32_t s = 0; s < dm; ++s) {
                    std::uint32_t c1 = m.left[i].at(r, s);
                    if (c1) eq[s * da + j] = static_cast<std::uint8_t>((eq[s * da + j] + p - c1) % p);
                    std::uint32_t c2 = m.right[j].at(r, s);
                    if (c2) eq[s * da + i] = static_cast<std::uint8_t>((eq[s * da + i] + p - c2) % p);
                }
                if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
            }
        }
    Matrix sys = eqs.empty() ? Matrix(0, nunk, p) : Matrix::from_rows(eqs, nunk, p);
    DerivationReport rep;
    rep.all = kernel_basis(sys);

    std::vector<linfp::Vec> inner_rows;
    for (std::uint32_t v = 0; v < dm; ++v) {
        linfp::Vec mv = linfp::unit_vec(dm, v, p);
        linfp::Vec flat(nunk, 0);
        for (std::uint32_t j = 0; j < da; ++j) {
            linfp::Vec col = linfp::vec_sub(m.left[j].apply(mv), m.right[j].apply(mv), p);
            for (std::uint32_t r = 0; r < dm; ++r) flat[r * da + j] = col[r];
        }
        inner_rows.push_back(std::move(flat));
    }
    rep.inner = Subspace::from_rows(Matrix::from_rows(inner_rows, nunk, p));
    if (!rep.all.contains(rep.inner))
        throw AxiomViolation("inner derivations are not derivations (broken instance)");
    rep.quotient_dim = rep.all.dim() - rep.inner.dim();
    return rep;
}

namespace {

// Multiplication by basis element a_i on the first (resp. last) tensor slot.
Matrix slot_mult(const TensorPowers& tp, std::uint32_t level, std::uint32_t i, bool first) {
    const std::uint32_t p = tp.a->p();
    const std::uint32_t da = tp.a->dim();
    const std::uint64_t ntup = tp.tuples(level);
    const std::uint64_t lead = ntup / da;
    Matrix values(tp.power[level].dim, static_cast<std::uint32_t>(ntup), p);
    for (std::uint64_t t = 0; t < ntup; ++t) {
        std::uint32_t digit = first ? static_cast<std::uint32_t>(t / lead)
                                    : static_cast<std::uint32_t>(t % da);
        const linfp::Vec& c = first ? tp.a->mult[i][digit] : tp.a->mult[digit][i];
        for (std::uint32_t l = 0; l < da; ++l) {
            if (!c[l]) continue;
            std::uint64_t t2 = first ? (t % lead) + std::uint64_t(l) * lead
                                     : (t - t % da) + l;
            for (std::uint32_t r = 0; r < values.rows(); ++r) {
                std::uint32_t v = values.at(r, static_cast<std::uint32_t>(t)) +
                                  c[l] * tp.pure_cols[level].at(r, static_cast<std::uint32_t>(t2));
                values.set(r, static_cast<std::uint32_t>(t), v % p);
            }
        }
    }
    return tp.map_from_pure_values(level, values);
}

}  // namespace

std::vector<std::uint32_t> bar_env_fix_dims(DiffAlgebraPtr a, const Bimodule& m,
                                            std::uint32_t max_degree, std::uint64_t dim_cap) {
    BarComplex bar = bar_complex(a, max_degree, dim_cap);
    tensorcat::Enveloping env = tensorcat::enveloping(a);
    std::vector<Matrix> act_m = env.actions_on(m);

    // Hom_{A^e-diff}(A^{(x) n+2}, M) per degree, via the commutation system.
    std::vector<Matrix> hom_flat;  // rows = flattened basis
    std::vector<linfp::SpanSolver> hom_coords;
    const std::uint32_t p = a->p();
    for (std::uint32_t n = 0; n <= max_degree; ++n) {
        const DiffModule& x = bar.powers.power[n + 2];
        std::vector<Matrix> act_x;
        for (std::uint32_t u = 0; u < env.env->dim(); ++u) {
            linfp::Vec lift = env.structure.lifts.row_vec(u);
            Matrix op(x.dim, x.dim, p);
            for (std::uint32_t i = 0; i < a->dim(); ++i)
                for (std::uint32_t j = 0; j < a->dim(); ++j) {
                    std::uint32_t c = lift[std::size_t(i) * a->dim() + j];
                    if (c) op = op + (slot_mult(bar.powers, n + 2, i, true) *
                                      slot_mult(bar.powers, n + 2, j, false)).scaled(c);
                }
            act_x.push_back(std::move(op));
        }
        std::vector<std::pair<const Matrix*, const Matrix*>> pairs;
        for (std::uint32_t u = 0; u < act_x.size(); ++u) pairs.push_back({&act_x[u], &act_m[u]});
        pairs.push_back({&x.sigma, &m.module.sigma});
        // Reuse the generic solver through hom basis flattening.
        const std::uint32_t nunk = m.dim() * x.dim;
        std::vector<linfp::Vec> eqs;
        for (auto [ax, am] : pairs) {
            for (std::uint32_t r = 0; r < m.dim(); ++r)
                for (std::uint32_t c = 0; c < x.dim; ++c) {
                    linfp::Vec eq(nunk, 0);
                    for (std::uint32_t j = 0; j < x.dim; ++j)
                        eq[r * x.dim + j] = static_cast<std::uint8_t>((eq[r * x.dim + j] + ax->at(j, c)) % p);
                    for (std::uint32_t j = 0; j < m.dim(); ++j)
                        eq[j * x.dim + c] = static_cast<std::uint8_t>((eq[j * x.dim + c] + p - am->at(r, j)) % p);
                    if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
                }
        }
        Matrix ker = linfp::kernel_basis_matrix(
            eqs.empty() ? Matrix(0, nunk, p) : Matrix::from_rows(eqs, nunk, p));
        hom_flat.push_back(ker);
        hom_coords.emplace_back(ker.rows() ? ker : Matrix(0, nunk, p));
    }

    // Precomposition differentials in hom coordinates, then rank arithmetic.
    std::vector<Matrix> dh;
    for (std::uint32_t n = 0; n + 1 <= max_degree; ++n) {
        const DiffModule& xs = bar.powers.power[n + 2];
        const DiffModule& xt = bar.powers.power[n + 3];
        Matrix cols(m.dim() * xt.dim, hom_flat[n].rows(), p);
        for (std::uint32_t b = 0; b < hom_flat[n].rows(); ++b) {
            Matrix f(m.dim(), xs.dim, p);
            for (std::uint32_t r = 0; r < m.dim(); ++r)
                for (std::uint32_t c = 0; c < xs.dim; ++c) f.set(r, c, hom_flat[n].at(b, r * xs.dim + c));
            Matrix fd = f * bar.d[n + 1];
            for (std::uint32_t r = 0; r < m.dim(); ++r)
                for (std::uint32_t c = 0; c < xt.dim; ++c) cols.set(r * xt.dim + c, b, fd.at(r, c));
        }
        dh.push_back(hom_coords[n + 1].coords_cols(cols, "bar hom differential"));
    }
    std::vector<std::uint32_t> dims;
    for (std::uint32_t n = 0; n + 1 <= max_degree; ++n) {
        std::uint32_t zk = hom_flat[n].rows() - rank(dh[n]);
        std::uint32_t bk = (n == 0) ? 0 : rank(dh[n - 1]);
        dims.push_back(zk - bk);
    }
    return dims;
}

}  // namespace dhh::hochschild
