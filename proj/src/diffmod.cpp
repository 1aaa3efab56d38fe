#include "dhh/diffmod.hpp"

#include <algorithm>

#include "dhh/errors.hpp"

namespace dhh::diffmod {

using linfp::kernel_basis;
using linfp::kernel_basis_matrix;
using linfp::image_basis;
using linfp::rank;
using linfp::vec_is_zero;

bool DiffRing::inversive() const { return rank(sigma) == dim; }

Vec DiffRing::mul_vec(const Vec& a, const Vec& b) const {
    Vec r(dim, 0);
    for (std::uint32_t i = 0; i < dim; ++i) {
        if (!a[i]) continue;
        for (std::uint32_t j = 0; j < dim; ++j) {
            if (!b[j]) continue;
            std::uint32_t c = a[i] * b[j] % p;
            const Vec& m = mult[i][j];
            for (std::uint32_t l = 0; l < dim; ++l)
                r[l] = static_cast<std::uint8_t>((r[l] + c * m[l]) % p);
        }
    }
    return r;
}

Matrix DiffRing::basis_mult_matrix(std::uint32_t i) const {
    Matrix m(dim, dim, p);
    for (std::uint32_t j = 0; j < dim; ++j)
        for (std::uint32_t l = 0; l < dim; ++l) m.set(l, j, mult[i][j][l]);
    return m;
}

Matrix DiffRing::mult_matrix(const Vec& a) const {
    Matrix m(dim, dim, p);
    for (std::uint32_t i = 0; i < dim; ++i) {
        if (!a[i]) continue;
        m = m + basis_mult_matrix(i).scaled(a[i]);
    }
    return m;
}

DiffRingPtr prime_field(std::uint32_t p) {
    DiffRing k;
    k.p = p;
    k.dim = 1;
    k.mult = {{Vec{1}}};
    k.unit = Vec{1};
    k.sigma = Matrix::identity(1, p);
    return std::make_shared<const DiffRing>(std::move(k));
}

Matrix DiffModule::act_of(const Vec& lambda) const {
    Matrix m(dim, dim, p());
    for (std::uint32_t i = 0; i < lambda.size(); ++i) {
        if (!lambda[i]) continue;
        m = m + act[i].scaled(lambda[i]);
    }
    return m;
}

bool DiffModule::inversive() const { return rank(sigma) == dim; }

Vec DiffAlgebra::mul_vec(const Vec& a, const Vec& b) const {
    const std::uint32_t n = dim(), pr = p();
    Vec r(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        if (!a[i]) continue;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (!b[j]) continue;
            std::uint32_t c = a[i] * b[j] % pr;
            const Vec& m = mult[i][j];
            for (std::uint32_t l = 0; l < n; ++l)
                r[l] = static_cast<std::uint8_t>((r[l] + c * m[l]) % pr);
        }
    }
    return r;
}

Matrix DiffAlgebra::left_mult(std::uint32_t i) const {
    Matrix m(dim(), dim(), p());
    for (std::uint32_t j = 0; j < dim(); ++j)
        for (std::uint32_t l = 0; l < dim(); ++l) m.set(l, j, mult[i][j][l]);
    return m;
}

Matrix DiffAlgebra::right_mult(std::uint32_t i) const {
    Matrix m(dim(), dim(), p());
    for (std::uint32_t j = 0; j < dim(); ++j)
        for (std::uint32_t l = 0; l < dim(); ++l) m.set(l, j, mult[j][i][l]);
    return m;
}

Matrix DiffAlgebra::left_mult_of(const Vec& a) const {
    Matrix m(dim(), dim(), p());
    for (std::uint32_t i = 0; i < dim(); ++i)
        if (a[i]) m = m + left_mult(i).scaled(a[i]);
    return m;
}

Matrix DiffAlgebra::right_mult_of(const Vec& a) const {
    Matrix m(dim(), dim(), p());
    for (std::uint32_t i = 0; i < dim(); ++i)
        if (a[i]) m = m + right_mult(i).scaled(a[i]);
    return m;
}

Matrix Bimodule::left_of(const Vec& a) const {
    Matrix m(dim(), dim(), p());
    for (std::uint32_t i = 0; i < a.size(); ++i)
        if (a[i]) m = m + left[i].scaled(a[i]);
    return m;
}

Matrix Bimodule::right_of(const Vec& a) const {
    Matrix m(dim(), dim(), p());
    for (std::uint32_t i = 0; i < a.size(); ++i)
        if (a[i]) m = m + right[i].scaled(a[i]);
    return m;
}

namespace {

void fail(ValidationReport& rep, const std::string& identity, const std::string& witness) {
    rep.ok = false;
    rep.violations.push_back({identity, witness});
}

std::string ij(std::uint32_t i, std::uint32_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

ValidationReport validate(const DiffRing& k) {
    ValidationReport rep;
    if (!linfp::is_prime(k.p)) {
        fail(rep, "p prime", std::to_string(k.p));
        return rep;
    }
    if (k.mult.size() != k.dim || k.unit.size() != k.dim ||
        k.sigma.rows() != k.dim || k.sigma.cols() != k.dim) {
        fail(rep, "shape", "structure constant tables");
        return rep;
    }
    for (std::uint32_t i = 0; i < k.dim && rep.ok; ++i)
        for (std::uint32_t j = 0; j < k.dim && rep.ok; ++j)
            if (k.mult[i].size() != k.dim || k.mult[i][j].size() != k.dim)
                fail(rep, "shape", "mult" + ij(i, j));
    if (!rep.ok) return rep;

    for (std::uint32_t i = 0; i < k.dim; ++i)
        for (std::uint32_t j = 0; j < i; ++j)
            if (k.mult[i][j] != k.mult[j][i]) {
                fail(rep, "commutativity e_i e_j = e_j e_i", ij(i, j));
                return rep;
            }
    for (std::uint32_t i = 0; i < k.dim; ++i)
        for (std::uint32_t j = 0; j < k.dim; ++j)
            for (std::uint32_t l = 0; l < k.dim; ++l) {
                Vec lhs = k.mul_vec(k.mult[i][j], linfp::unit_vec(k.dim, l, k.p));
                Vec rhs = k.mul_vec(linfp::unit_vec(k.dim, i, k.p), k.mult[j][l]);
                if (lhs != rhs) {
                    fail(rep, "associativity (e_i e_j) e_l = e_i (e_j e_l)", ij(i, j) + "," + std::to_string(l));
                    return rep;
                }
            }
    for (std::uint32_t i = 0; i < k.dim; ++i) {
        Vec e = linfp::unit_vec(k.dim, i, k.p);
        if (k.mul_vec(k.unit, e) != e) {
            fail(rep, "unit law 1*e_i = e_i", std::to_string(i));
            return rep;
        }
    }
    for (std::uint32_t i = 0; i < k.dim; ++i)
        for (std::uint32_t j = 0; j < k.dim; ++j) {
            Vec lhs = k.sigma.apply(k.mult[i][j]);
            Vec rhs = k.mul_vec(k.sigma.col_vec(i), k.sigma.col_vec(j));
            if (lhs != rhs) {
                fail(rep, "sigma(e_i e_j) = sigma(e_i) sigma(e_j)", ij(i, j));
                return rep;
            }
        }
    if (k.sigma.apply(k.unit) != k.unit) fail(rep, "sigma(1) = 1", "");
    return rep;
}

ValidationReport validate(const DiffModule& m) {
    ValidationReport rep;
    const DiffRing& k = *m.ring;
    if (m.act.size() != k.dim || m.sigma.rows() != m.dim || m.sigma.cols() != m.dim) {
        fail(rep, "shape", "module tables");
        return rep;
    }
    if (!m.act_of(k.unit).is_identity()) {
        fail(rep, "act(1) = id", "");
        return rep;
    }
    for (std::uint32_t i = 0; i < k.dim; ++i)
        for (std::uint32_t j = 0; j < k.dim; ++j)
            if (m.act[i] * m.act[j] != m.act_of(k.mult[i][j])) {
                fail(rep, "act(e_i) act(e_j) = act(e_i e_j)", ij(i, j));
                return rep;
            }
    for (std::uint32_t i = 0; i < k.dim; ++i)
        if (m.sigma * m.act[i] != m.act_of(k.sigma.col_vec(i)) * m.sigma) {
            fail(rep, "sigma act(e_i) = act(sigma e_i) sigma", std::to_string(i));
            return rep;
        }
    return rep;
}

ValidationReport validate(const DiffAlgebra& a) {
    ValidationReport rep = validate(a.module);
    if (!rep.ok) return rep;
    const std::uint32_t n = a.dim(), p = a.p();
    if (a.mult.size() != n || a.unit.size() != n) {
        fail(rep, "shape", "algebra tables");
        return rep;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            for (std::uint32_t l = 0; l < n; ++l) {
                Vec lhs = a.mul_vec(a.mult[i][j], linfp::unit_vec(n, l, p));
                Vec rhs = a.mul_vec(linfp::unit_vec(n, i, p), a.mult[j][l]);
                if (lhs != rhs) {
                    fail(rep, "associativity (a_i a_j) a_l = a_i (a_j a_l)", ij(i, j) + "," + std::to_string(l));
                    return rep;
                }
            }
    for (std::uint32_t i = 0; i < n; ++i) {
        Vec e = linfp::unit_vec(n, i, p);
        if (a.mul_vec(a.unit, e) != e || a.mul_vec(e, a.unit) != e) {
            fail(rep, "unit law", std::to_string(i));
            return rep;
        }
    }
    // k-bilinearity: act(lambda) commutes into either slot of the product.
    for (std::uint32_t lam = 0; lam < a.ring()->dim; ++lam) {
        const Matrix& al = a.module.act[lam];
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) {
                Vec scaled = al.apply(a.mult[i][j]);
                if (a.mul_vec(al.col_vec(i), linfp::unit_vec(n, j, p)) != scaled) {
                    fail(rep, "k-bilinearity (lambda a_i) a_j = lambda (a_i a_j)", ij(i, j));
                    return rep;
                }
                if (a.mul_vec(linfp::unit_vec(n, i, p), al.col_vec(j)) != scaled) {
                    fail(rep, "k-bilinearity a_i (lambda a_j) = lambda (a_i a_j)", ij(i, j));
                    return rep;
                }
            }
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            Vec lhs = a.module.sigma.apply(a.mult[i][j]);
            Vec rhs = a.mul_vec(a.module.sigma.col_vec(i), a.module.sigma.col_vec(j));
            if (lhs != rhs) {
                fail(rep, "sigma_A(a_i a_j) = sigma_A(a_i) sigma_A(a_j)", ij(i, j));
                return rep;
            }
        }
    if (a.module.sigma.apply(a.unit) != a.unit) fail(rep, "sigma_A(1) = 1", "");
    return rep;
}

ValidationReport validate(const Bimodule& m) {
    ValidationReport rep = validate(m.module);
    if (!rep.ok) return rep;
    const DiffAlgebra& a = *m.algebra;
    const std::uint32_t n = a.dim();
    if (m.left.size() != n || m.right.size() != n) {
        fail(rep, "shape", "bimodule action tables");
        return rep;
    }
    if (!m.left_of(a.unit).is_identity()) {
        fail(rep, "left(1) = id", "");
        return rep;
    }
    if (!m.right_of(a.unit).is_identity()) {
        fail(rep, "right(1) = id", "");
        return rep;
    }
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            if (m.left[i] * m.left[j] != m.left_of(a.mult[i][j])) {
                fail(rep, "left(a_i) left(a_j) = left(a_i a_j)", ij(i, j));
                return rep;
            }
            // (m a_i) a_j = m (a_i a_j): right actions compose contravariantly.
            if (m.right[j] * m.right[i] != m.right_of(a.mult[i][j])) {
                fail(rep, "right(a_j) right(a_i) = right(a_i a_j)", ij(i, j));
                return rep;
            }
            if (m.left[i] * m.right[j] != m.right[j] * m.left[i]) {
                fail(rep, "left(a_i) right(a_j) commute", ij(i, j));
                return rep;
            }
        }
    for (std::uint32_t lam = 0; lam < a.ring()->dim; ++lam) {
        Vec lam_one = a.module.act[lam].apply(a.unit);
        if (m.left_of(lam_one) != m.module.act[lam] || m.right_of(lam_one) != m.module.act[lam]) {
            fail(rep, "k acts identically via left, right and act", std::to_string(lam));
            return rep;
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        Vec sig_ai = a.module.sigma.col_vec(i);
        if (m.module.sigma * m.left[i] != m.left_of(sig_ai) * m.module.sigma) {
            fail(rep, "sigma_M left(a_i) = left(sigma_A a_i) sigma_M", std::to_string(i));
            return rep;
        }
        if (m.module.sigma * m.right[i] != m.right_of(sig_ai) * m.module.sigma) {
            fail(rep, "sigma_M right(a_i) = right(sigma_A a_i) sigma_M", std::to_string(i));
            return rep;
        }
    }
    return rep;
}

bool is_k_linear(const Matrix& f, const DiffModule& src, const DiffModule& tgt) {
    for (std::uint32_t i = 0; i < src.ring->dim; ++i)
        if (f * src.act[i] != tgt.act[i] * f) return false;
    return true;
}

bool is_difference_linear(const Matrix& f, const DiffModule& src, const DiffModule& tgt) {
    return is_k_linear(f, src, tgt) && f * src.sigma == tgt.sigma * f;
}

namespace {

// Kernel of the commutation system F A_i = B_i F over all listed pairs,
// unknown F flattened row-major.
HomBasis solve_commutation(std::uint32_t rows_f, std::uint32_t cols_f, std::uint32_t p,
                           const std::vector<std::pair<const Matrix*, const Matrix*>>& pairs) {
    const std::uint32_t nunk = rows_f * cols_f;
    std::vector<Vec> eqs;
    for (auto [a, b] : pairs) {
        for (std::uint32_t r = 0; r < rows_f; ++r)
            for (std::uint32_t c = 0; c < cols_f; ++c) {
                Vec eq(nunk, 0);
                for (std::uint32_t j = 0; j < cols_f; ++j)
                    eq[r * cols_f + j] = static_cast<std::uint8_t>((eq[r * cols_f + j] + a->at(j, c)) % p);
                for (std::uint32_t j = 0; j < rows_f; ++j)
                    eq[j * cols_f + c] = static_cast<std::uint8_t>((eq[j * cols_f + c] + p - b->at(r, j) % p) % p);
                if (!vec_is_zero(eq)) eqs.push_back(std::move(eq));
            }
    }
    Matrix sys = Matrix::from_rows(eqs, nunk, p);
    Matrix ker = kernel_basis_matrix(sys);
    HomBasis out;
    for (std::uint32_t i = 0; i < ker.rows(); ++i) {
        Matrix f(rows_f, cols_f, p);
        for (std::uint32_t r = 0; r < rows_f; ++r)
            for (std::uint32_t c = 0; c < cols_f; ++c) f.set(r, c, ker.at(i, r * cols_f + c));
        out.basis.push_back(std::move(f));
    }
    return out;
}

}  // namespace

HomBasis hom_diff(const DiffModule& m, const DiffModule& n) {
    if (m.ring != n.ring && !(m.ring->dim == n.ring->dim && m.ring->p == n.ring->p))
        throw ShapeMismatch("hom_diff: modules over different rings");
    std::vector<std::pair<const Matrix*, const Matrix*>> pairs;
    for (std::uint32_t i = 0; i < m.ring->dim; ++i) pairs.push_back({&m.act[i], &n.act[i]});
    pairs.push_back({&m.sigma, &n.sigma});
    return solve_commutation(n.dim, m.dim, m.p(), pairs);
}

HomBasis hom_k_linear(const DiffModule& m, const DiffModule& n) {
    std::vector<std::pair<const Matrix*, const Matrix*>> pairs;
    for (std::uint32_t i = 0; i < m.ring->dim; ++i) pairs.push_back({&m.act[i], &n.act[i]});
    return solve_commutation(n.dim, m.dim, m.p(), pairs);
}

Vec QuotientMap::coords(const Vec& v) const {
    Vec full = solver.coords_or_throw(v, "QuotientMap::coords");
    full.resize(dim());
    return full;
}

Matrix QuotientMap::induced(const Matrix& op) const {
    Matrix cols = solver.coords_cols(op * lifts.transpose(), "QuotientMap::induced");
    return cols.sub_rows(0, dim());
}

bool QuotientMap::descends(const Matrix& op) const {
    Subspace k{ambient, killed};
    for (std::uint32_t i = 0; i < killed.rows(); ++i)
        if (!k.contains(op.apply(killed.row_vec(i)))) return false;
    return true;
}

QuotientMap quotient_map(const Subspace& space, const Subspace& killed) {
    linfp::SubquotientBasis sq = linfp::subquotient(space, killed);
    QuotientMap qm;
    qm.lifts = sq.lifts;
    qm.killed = killed.basis;
    qm.ambient = space.ambient;
    qm.solver = SpanSolver(sq.lifts.vstack(killed.basis));
    return qm;
}

SubquotientModule subquotient_module(const Subspace& coc, const Subspace& cob, const DiffModule& ambient) {
    for (std::uint32_t i = 0; i < ambient.ring->dim; ++i) {
        const Matrix& op = ambient.act[i];
        for (const Subspace* s : {&coc, &cob})
            for (std::uint32_t r = 0; r < s->basis.rows(); ++r)
                if (!s->contains(op.apply(s->basis.row_vec(r))))
                    throw StabilityViolation("subspace not stable under act(e_" + std::to_string(i) + ")");
    }
    for (const Subspace* s : {&coc, &cob})
        for (std::uint32_t r = 0; r < s->basis.rows(); ++r)
            if (!s->contains(ambient.sigma.apply(s->basis.row_vec(r))))
                throw StabilityViolation("subspace not stable under sigma");

    SubquotientModule out;
    out.classes = quotient_map(coc, cob);
    out.module.ring = ambient.ring;
    out.module.dim = out.classes.dim();
    for (const Matrix& a : ambient.act) out.module.act.push_back(out.classes.induced(a));
    out.module.sigma = out.classes.induced(ambient.sigma);
    return out;
}

Subspace fix_module(const DiffModule& m) {
    return kernel_basis(m.sigma - Matrix::identity(m.dim, m.p()));
}

QuotientMap coinv_module(const DiffModule& m) {
    Matrix d = m.sigma - Matrix::identity(m.dim, m.p());
    return quotient_map(Subspace::full(m.dim, m.p()), image_basis(d));
}

DiffAlgebra opposite(const DiffAlgebra& a) {
    DiffAlgebra op = a;
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        for (std::uint32_t j = 0; j < a.dim(); ++j) op.mult[i][j] = a.mult[j][i];
    return op;
}

DiffModule restrict_to_k(const Bimodule& m) { return m.module; }

Bimodule regular_bimodule(DiffAlgebraPtr a, const Vec& twist_unit) {
    Matrix lu = a->left_mult_of(twist_unit);
    if (lu != a->right_mult_of(twist_unit))
        throw AxiomViolation("regular_bimodule: twist unit is not central");
    if (linfp::rank(lu) != a->dim())
        throw AxiomViolation("regular_bimodule: twist element is not a unit");
    Bimodule m;
    m.algebra = a;
    m.module = a->module;
    m.module.sigma = lu * a->module.sigma;
    for (std::uint32_t i = 0; i < a->dim(); ++i) {
        m.left.push_back(a->left_mult(i));
        m.right.push_back(a->right_mult(i));
    }
    return m;
}

}  // namespace dhh::diffmod
