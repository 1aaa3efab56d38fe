#include "dhh/instances.hpp"

#include <algorithm>
#include <numeric>

#include "dhh/errors.hpp"

namespace dhh::instances {

using diffmod::prime_field;
using diffmod::validate;
using linfp::inverse;
using linfp::kernel_basis_matrix;
using linfp::rank;
using linfp::unit_vec;

std::uint64_t RandomSource::next() {
    // splitmix-fed xorshift; fixed across platforms
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint32_t RandomSource::below(std::uint32_t n) {
    return n ? static_cast<std::uint32_t>(next() % n) : 0;
}

std::uint32_t RandomSource::weighted(const std::vector<std::uint32_t>& w) {
    std::uint32_t total = std::accumulate(w.begin(), w.end(), 0u);
    std::uint32_t r = below(total);
    for (std::uint32_t i = 0; i < w.size(); ++i) {
        if (r < w[i]) return i;
        r -= w[i];
    }
    return static_cast<std::uint32_t>(w.size() - 1);
}

namespace {

void must_validate(const diffmod::ValidationReport& rep, const char* what) {
    if (!rep.ok) throw AxiomViolation(std::string(what) + ": " + rep.first());
}

Vec embed_block(const Vec& v, std::uint32_t block, std::uint32_t nblocks) {
    Vec r(v.size() * nblocks, 0);
    std::copy(v.begin(), v.end(), r.begin() + std::size_t(block) * v.size());
    return r;
}

}  // namespace

DiffRingPtr field_ext_ring(std::uint32_t p, bool frobenius) {
    // F_p[w]/(w^2 - b w - a) irreducible: w^2 = a + b w.
    std::uint32_t a = 0, b = 0;
    bool found = false;
    for (std::uint32_t bb = 0; bb < p && !found; ++bb)
        for (std::uint32_t aa = 1; aa < p && !found; ++aa) {
            bool irred = true;
            for (std::uint32_t x = 0; x < p; ++x)
                if ((x * x) % p == (aa + bb * x) % p) irred = false;
            if (irred) {
                a = aa;
                b = bb;
                found = true;
            }
        }
    if (!found) throw AxiomViolation("no irreducible quadratic found");
    DiffRing k;
    k.p = p;
    k.dim = 2;
    k.unit = {1, 0};
    k.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)}}};
    if (frobenius) {
        // w^p via square-and-multiply in the ring.
        Vec w = {0, 1};
        Vec acc = {1, 0};
        DiffRing tmp = k;
        tmp.sigma = Matrix::identity(2, p);
        std::uint32_t e = p;
        Vec base = w;
        while (e) {
            if (e & 1) acc = tmp.mul_vec(acc, base);
            base = tmp.mul_vec(base, base);
            e >>= 1;
        }
        Matrix sg(2, 2, p);
        sg.set(0, 0, 1);
        sg.set(0, 1, acc[0]);
        sg.set(1, 1, acc[1]);
        k.sigma = sg;
    } else {
        k.sigma = Matrix::identity(2, p);
    }
    auto kp = std::make_shared<const DiffRing>(std::move(k));
    must_validate(validate(*kp), "field_ext_ring");
    return kp;
}

DiffRingPtr dual_numbers_ring(std::uint32_t p, std::uint32_t unit) {
    DiffRing k;
    k.p = p;
    k.dim = 2;
    k.unit = {1, 0};
    k.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
    Matrix sg = Matrix::identity(2, p);
    sg.set(1, 1, unit % p);
    k.sigma = sg;
    auto kp = std::make_shared<const DiffRing>(std::move(k));
    must_validate(validate(*kp), "dual_numbers_ring");
    return kp;
}

DiffRingPtr product_ring(std::uint32_t p, bool swap) {
    DiffRing k;
    k.p = p;
    k.dim = 2;
    k.unit = {1, 1};
    k.mult = {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}};
    k.sigma = Matrix::identity(2, p);
    if (swap) {
        k.sigma = Matrix(2, 2, p);
        k.sigma.set(0, 1, 1);
        k.sigma.set(1, 0, 1);
    }
    auto kp = std::make_shared<const DiffRing>(std::move(k));
    must_validate(validate(*kp), "product_ring");
    return kp;
}

DiffRingPtr cyclic_product_ring(std::uint32_t p, std::uint32_t n) {
    DiffRing k;
    k.p = p;
    k.dim = n;
    k.unit = Vec(n, 1);
    k.mult.assign(n, std::vector<Vec>(n, Vec(n, 0)));
    for (std::uint32_t i = 0; i < n; ++i) k.mult[i][i][i] = 1;
    k.sigma = Matrix(n, n, p);
    for (std::uint32_t i = 0; i < n; ++i) k.sigma.set((i + 1) % n, i, 1);
    auto kp = std::make_shared<const DiffRing>(std::move(k));
    must_validate(validate(*kp), "cyclic_product_ring");
    return kp;
}

DiffAlgebraPtr ring_as_algebra(DiffRingPtr k) {
    DiffAlgebra a;
    a.module.ring = k;
    a.module.dim = k->dim;
    for (std::uint32_t i = 0; i < k->dim; ++i) a.module.act.push_back(k->basis_mult_matrix(i));
    a.module.sigma = k->sigma;
    a.mult = k->mult;
    a.unit = k->unit;
    auto ap = std::make_shared<const DiffAlgebra>(std::move(a));
    must_validate(validate(*ap), "ring_as_algebra");
    return ap;
}

DiffAlgebraPtr free_rank2_algebra(DiffRingPtr k, bool square_one, const Vec& twist) {
    const std::uint32_t dk = k->dim, p = k->p;
    const std::uint32_t n = 2 * dk;  // flat (t, i) = t*dk + i, t in {0 = 1-block, 1 = d-block}
    DiffAlgebra a;
    a.module.ring = k;
    a.module.dim = n;
    for (std::uint32_t i = 0; i < dk; ++i)
        a.module.act.push_back(Matrix::identity(2, p).kron(k->basis_mult_matrix(i)));
    a.unit = embed_block(k->unit, 0, 2);
    a.mult.assign(n, std::vector<Vec>(n));
    for (std::uint32_t t = 0; t < 2; ++t)
        for (std::uint32_t i = 0; i < dk; ++i)
            for (std::uint32_t s = 0; s < 2; ++s)
                for (std::uint32_t j = 0; j < dk; ++j) {
                    Vec prod = k->mult[i][j];
                    Vec out(n, 0);
                    if (t + s <= 1) {
                        out = embed_block(prod, t + s, 2);
                    } else if (square_one) {
                        out = embed_block(prod, 0, 2);
                    }
                    a.mult[t * dk + i][s * dk + j] = out;
                }
    Matrix sg(n, n, p);
    for (std::uint32_t i = 0; i < dk; ++i) {
        Vec c0 = k->sigma.col_vec(i);
        for (std::uint32_t l = 0; l < dk; ++l)
            if (c0[l]) sg.set(l, i, c0[l]);
        Vec c1 = k->mul_vec(c0, twist);
        for (std::uint32_t l = 0; l < dk; ++l)
            if (c1[l]) sg.set(dk + l, dk + i, c1[l]);
    }
    a.module.sigma = std::move(sg);
    auto ap = std::make_shared<const DiffAlgebra>(std::move(a));
    must_validate(validate(*ap), "free_rank2_algebra");
    return ap;
}

DiffAlgebraPtr upper_triangular2(std::uint32_t p) {
    // basis: E11, E22, E12
    DiffAlgebra a;
    a.module.ring = prime_field(p);
    a.module.dim = 3;
    a.module.act = {Matrix::identity(3, p)};
    a.module.sigma = Matrix::identity(3, p);
    a.unit = {1, 1, 0};
    auto z = Vec{0, 0, 0};
    a.mult = {{{1, 0, 0}, z, {0, 0, 1}},
              {z, {0, 1, 0}, z},
              {z, {0, 0, 1}, z}};
    auto ap = std::make_shared<const DiffAlgebra>(std::move(a));
    must_validate(validate(*ap), "upper_triangular2");
    return ap;
}

DiffAlgebraPtr matrix2(std::uint32_t p) {
    // basis: E11, E12, E21, E22
    DiffAlgebra a;
    a.module.ring = prime_field(p);
    a.module.dim = 4;
    a.module.act = {Matrix::identity(4, p)};
    a.module.sigma = Matrix::identity(4, p);
    a.unit = {1, 0, 0, 1};
    auto z = Vec{0, 0, 0, 0};
    auto e = [&](std::uint32_t i) { return unit_vec(4, i, p); };
    a.mult.assign(4, std::vector<Vec>(4, z));
    // E_{ab} E_{cd} = delta_{bc} E_{ad}; order (11, 12, 21, 22)
    auto pos = [](std::uint32_t r, std::uint32_t c) { return r * 2 + c; };
    for (std::uint32_t r1 = 0; r1 < 2; ++r1)
        for (std::uint32_t c1 = 0; c1 < 2; ++c1)
            for (std::uint32_t r2 = 0; r2 < 2; ++r2)
                for (std::uint32_t c2 = 0; c2 < 2; ++c2)
                    if (c1 == r2) a.mult[pos(r1, c1)][pos(r2, c2)] = e(pos(r1, c2));
    auto ap = std::make_shared<const DiffAlgebra>(std::move(a));
    must_validate(validate(*ap), "matrix2");
    return ap;
}

Bimodule augmentation_bimodule(DiffAlgebraPtr a) {
    // Defined for the free rank-2 algebras: d -> 0 (nilpotent) or d -> 1.
    const auto& k = *a->ring();
    const std::uint32_t dk = k.dim, p = k.p;
    if (a->dim() != 2 * dk) throw ShapeMismatch("augmentation_bimodule expects a free rank-2 algebra");
    bool square_one = !linfp::vec_is_zero(a->mul_vec(unit_vec(2 * dk, dk, p), unit_vec(2 * dk, dk, p)));
    Bimodule m;
    m.algebra = a;
    m.module.ring = a->ring();
    m.module.dim = dk;
    for (std::uint32_t i = 0; i < dk; ++i) m.module.act.push_back(k.basis_mult_matrix(i));
    m.module.sigma = k.sigma;
    for (std::uint32_t t = 0; t < 2; ++t)
        for (std::uint32_t i = 0; i < dk; ++i) {
            Matrix op = (t == 0 || square_one) ? k.basis_mult_matrix(i) : Matrix(dk, dk, p);
            m.left.push_back(op);
            m.right.push_back(op);
        }
    must_validate(validate(m), "augmentation_bimodule");
    return m;
}

Matrix center_basis(const DiffAlgebra& a) {
    const std::uint32_t n = a.dim(), p = a.p();
    std::vector<Vec> rows;
    for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c) {
            Vec eq(n, 0);
            for (std::uint32_t i = 0; i < n; ++i) {
                std::uint32_t v = (a.left_mult(i).at(r, c) + p - a.right_mult(i).at(r, c)) % p;
                eq[i] = static_cast<std::uint8_t>(v);
            }
            if (!linfp::vec_is_zero(eq)) rows.push_back(std::move(eq));
        }
    Matrix sys = rows.empty() ? Matrix(0, n, p) : Matrix::from_rows(rows, n, p);
    return kernel_basis_matrix(sys);
}

std::vector<std::string> preset_names() {
    return {"trivial-f2", "classical-dual-numbers", "twisted-dual-numbers",
            "f4-frobenius", "uppertriangular-f2", "m2-f2"};
}

Instance preset(const std::string& name) {
    Instance inst;
    inst.name = name;
    if (name == "trivial-f2") {
        inst.algebra = ring_as_algebra(prime_field(2));
        inst.bimodule = diffmod::regular_bimodule(inst.algebra, inst.algebra->unit);
    } else if (name == "classical-dual-numbers") {
        inst.algebra = free_rank2_algebra(prime_field(2), false, Vec{1});
        inst.bimodule = diffmod::regular_bimodule(inst.algebra, inst.algebra->unit);
    } else if (name == "twisted-dual-numbers") {
        inst.algebra = free_rank2_algebra(prime_field(2), false, Vec{1});
        // sigma_M = multiplication by 1 + eps
        inst.bimodule = diffmod::regular_bimodule(inst.algebra, Vec{1, 1, 0, 0});
    } else if (name == "f4-frobenius") {
        inst.algebra = ring_as_algebra(field_ext_ring(2, true));
        inst.bimodule = diffmod::regular_bimodule(inst.algebra, inst.algebra->unit);
    } else if (name == "uppertriangular-f2") {
        inst.algebra = upper_triangular2(2);
        inst.bimodule = diffmod::regular_bimodule(inst.algebra, inst.algebra->unit);
    } else if (name == "m2-f2") {
        inst.algebra = matrix2(2);
        inst.bimodule = diffmod::regular_bimodule(inst.algebra, inst.algebra->unit);
    } else {
        throw ParseError("unknown preset '" + name + "'");
    }
    return inst;
}

Matrix random_invertible(RandomSource& rng, std::uint32_t n, std::uint32_t p) {
    for (std::uint32_t tries = 0; tries < 1000; ++tries) {
        Matrix m(n, n, p);
        for (std::uint32_t r = 0; r < n; ++r)
            for (std::uint32_t c = 0; c < n; ++c) m.set(r, c, rng.below(p));
        if (rank(m) == n) return m;
    }
    throw AxiomViolation("random_invertible: no invertible matrix found");
}

namespace {

DiffRingPtr transport_ring(const DiffRing& k, const Matrix& pch) {
    Matrix pinv = inverse(pch);
    DiffRing out;
    out.p = k.p;
    out.dim = k.dim;
    out.unit = pinv.apply(k.unit);
    out.sigma = pinv * k.sigma * pch;
    out.mult.assign(k.dim, std::vector<Vec>(k.dim));
    for (std::uint32_t i = 0; i < k.dim; ++i)
        for (std::uint32_t j = 0; j < k.dim; ++j)
            out.mult[i][j] = pinv.apply(k.mul_vec(pch.col_vec(i), pch.col_vec(j)));
    return std::make_shared<const DiffRing>(std::move(out));
}

DiffAlgebraPtr transport_algebra(const DiffAlgebra& a, DiffRingPtr new_ring, const Matrix& pk,
                                 const Matrix& pa) {
    Matrix painv = inverse(pa);
    DiffAlgebra out;
    out.module.ring = new_ring;
    out.module.dim = a.dim();
    for (std::uint32_t lam = 0; lam < new_ring->dim; ++lam)
        out.module.act.push_back(painv * a.module.act_of(pk.col_vec(lam)) * pa);
    out.module.sigma = painv * a.module.sigma * pa;
    out.unit = painv.apply(a.unit);
    out.mult.assign(a.dim(), std::vector<Vec>(a.dim()));
    for (std::uint32_t i = 0; i < a.dim(); ++i)
        for (std::uint32_t j = 0; j < a.dim(); ++j)
            out.mult[i][j] = painv.apply(a.mul_vec(pa.col_vec(i), pa.col_vec(j)));
    return std::make_shared<const DiffAlgebra>(std::move(out));
}

Bimodule transport_bimodule(const Bimodule& m, DiffAlgebraPtr new_alg, const Matrix& pk,
                            const Matrix& pa, const Matrix& pm) {
    Matrix pminv = inverse(pm);
    Bimodule out;
    out.algebra = new_alg;
    out.module.ring = new_alg->ring();
    out.module.dim = m.dim();
    for (std::uint32_t lam = 0; lam < new_alg->ring()->dim; ++lam)
        out.module.act.push_back(pminv * m.module.act_of(pk.col_vec(lam)) * pm);
    out.module.sigma = pminv * m.module.sigma * pm;
    for (std::uint32_t i = 0; i < new_alg->dim(); ++i) {
        out.left.push_back(pminv * m.left_of(pa.col_vec(i)) * pm);
        out.right.push_back(pminv * m.right_of(pa.col_vec(i)) * pm);
    }
    return out;
}

Vec random_unit(RandomSource& rng, const DiffRing& k) {
    for (std::uint32_t tries = 0; tries < 200; ++tries) {
        Vec v(k.dim);
        for (std::uint32_t i = 0; i < k.dim; ++i) v[i] = static_cast<std::uint8_t>(rng.below(k.p));
        if (rank(k.mult_matrix(v)) == k.dim) return v;
    }
    return k.unit;
}

Vec random_central_unit(RandomSource& rng, const DiffAlgebra& a) {
    Matrix cb = center_basis(a);
    for (std::uint32_t tries = 0; tries < 200; ++tries) {
        Vec coeff(cb.rows());
        for (std::uint32_t i = 0; i < cb.rows(); ++i) coeff[i] = static_cast<std::uint8_t>(rng.below(a.p()));
        Vec v = cb.apply_t(coeff);
        if (rank(a.left_mult_of(v)) == a.dim()) return v;
    }
    return a.unit;
}

}  // namespace

DiffRingPtr random_base_ring(RandomSource& rng, std::uint32_t p, bool inversive) {
    switch (rng.weighted({3, 2, 1, 1, 1})) {
        case 0: return prime_field(p);
        case 1: return field_ext_ring(p, rng.below(2) == 0);
        case 2: {
            std::uint32_t u = inversive ? 1 + rng.below(p - 1) : rng.below(p);
            return dual_numbers_ring(p, u);
        }
        case 3: return product_ring(p, rng.below(2) == 0);
        default: return cyclic_product_ring(p, 3);
    }
}

DiffModule random_module(RandomSource& rng, DiffRingPtr k, std::uint32_t rank_, bool inversive) {
    const std::uint32_t p = k->p;
    DiffModule m;
    m.ring = k;
    m.dim = rank_ * k->dim;
    Matrix idr = Matrix::identity(rank_, p);
    for (std::uint32_t i = 0; i < k->dim; ++i) m.act.push_back(idr.kron(k->basis_mult_matrix(i)));
    Matrix diag = idr.kron(k->sigma);
    // Twist by a random k-linear automorphism (solution of the commutation
    // system with the action matrices).
    diffmod::HomBasis endos = diffmod::hom_k_linear(m, m);
    for (std::uint32_t tries = 0; tries < 200; ++tries) {
        Matrix tw(m.dim, m.dim, p);
        for (const Matrix& b : endos.basis)
            if (std::uint32_t c = rng.below(p); c) tw = tw + b.scaled(c);
        Matrix cand = tw * diag;
        if (inversive && linfp::rank(cand) != m.dim) continue;
        m.sigma = std::move(cand);
        must_validate(validate(m), "random_module");
        return m;
    }
    m.sigma = diag;
    must_validate(validate(m), "random_module");
    return m;
}

Instance random_instance(RandomSource& rng, const InstanceOptions& opt) {
    for (std::uint32_t attempt = 0; attempt < 200; ++attempt) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 2, 2, 3, 3, 5}[rng.below(6)];
        DiffRingPtr k = random_base_ring(rng, p, opt.inversive);

        DiffAlgebraPtr a;
        switch (rng.weighted({3, 3, 1, 1, 1})) {
            case 0: a = ring_as_algebra(k); break;
            case 1: a = free_rank2_algebra(k, false, random_unit(rng, *k)); break;
            case 2: a = free_rank2_algebra(k, true, k->unit); break;
            case 3:
                if (k->dim == 1) a = upper_triangular2(p);
                else a = ring_as_algebra(k);
                break;
            default:
                if (k->dim == 1 && p == 2) a = matrix2(p);
                else a = free_rank2_algebra(k, false, k->unit);
                break;
        }

        Bimodule m;
        switch (rng.weighted({2, 2, 1})) {
            case 0: m = diffmod::regular_bimodule(a, a->unit); break;
            case 1: m = diffmod::regular_bimodule(a, random_central_unit(rng, *a)); break;
            default:
                if (a->dim() == 2 * a->ring()->dim) m = augmentation_bimodule(a);
                else m = diffmod::regular_bimodule(a, a->unit);
                break;
        }

        if (k->dim > 4 || a->dim() > 4 || m.dim() > 4) continue;

        // Budget: dim of the top carrier [A^{(x)D+1}, M].
        std::uint64_t dk = a->ring()->dim;
        std::uint64_t rk = a->dim() / dk;
        std::uint64_t top = dk;
        for (std::uint32_t i = 0; i <= opt.max_degree; ++i) top *= rk;
        top *= m.dim();
        if (top > (p == 2 ? opt.budget_p2 : opt.budget_odd)) continue;

        // Random change of basis on k, A, M.
        Matrix pk = random_invertible(rng, k->dim, p);
        Matrix pa = random_invertible(rng, a->dim(), p);
        Matrix pm = random_invertible(rng, m.dim(), p);
        DiffRingPtr k2 = transport_ring(*k, pk);
        DiffAlgebraPtr a2 = transport_algebra(*a, k2, pk, pa);
        Bimodule m2 = transport_bimodule(m, a2, pk, pa, pm);
        must_validate(validate(*k2), "random_instance ring");
        must_validate(validate(*a2), "random_instance algebra");
        must_validate(validate(m2), "random_instance bimodule");
        if (opt.inversive && (!k2->inversive() || !a2->module.inversive() || !m2.module.inversive()))
            continue;

        Instance inst;
        inst.name = "random";
        inst.algebra = a2;
        inst.bimodule = std::move(m2);
        return inst;
    }
    throw AxiomViolation("random_instance: no instance found within budget");
}

hochschild::CochainComplex random_complex(RandomSource& rng, std::uint32_t max_len,
                                          std::uint32_t max_dim, std::uint32_t p) {
    const std::uint32_t len = 2 + rng.below(max_len - 1);
    DiffRingPtr k = prime_field(p);
    hochschild::CochainComplex c;
    for (std::uint32_t n = 0; n < len; ++n) {
        DiffModule t;
        t.ring = k;
        t.dim = 1 + rng.below(max_dim);
        t.act = {Matrix::identity(t.dim, p)};
        switch (rng.weighted({1, 2, 2})) {
            case 0: t.sigma = Matrix::identity(t.dim, p); break;
            case 1: t.sigma = random_invertible(rng, t.dim, p); break;
            default: {
                Matrix s(t.dim, t.dim, p);
                for (std::uint32_t r = 0; r < t.dim; ++r)
                    for (std::uint32_t cc = 0; cc < t.dim; ++cc) s.set(r, cc, rng.below(p));
                t.sigma = s;
                break;
            }
        }
        c.terms.push_back(std::move(t));
    }
    for (std::uint32_t n = 0; n + 1 < len; ++n) {
        const std::uint32_t rows = c.terms[n + 1].dim, cols = c.terms[n].dim;
        const std::uint32_t nunk = rows * cols;
        // d sigma_n = sigma_{n+1} d, and d d_prev = 0.
        std::vector<Vec> eqs;
        for (std::uint32_t r = 0; r < rows; ++r)
            for (std::uint32_t cc = 0; cc < cols; ++cc) {
                Vec eq(nunk, 0);
                for (std::uint32_t j = 0; j < cols; ++j)
                    eq[r * cols + j] = static_cast<std::uint8_t>((eq[r * cols + j] + c.terms[n].sigma.at(j, cc)) % p);
                for (std::uint32_t j = 0; j < rows; ++j)
                    eq[j * cols + cc] = static_cast<std::uint8_t>((eq[j * cols + cc] + p - c.terms[n + 1].sigma.at(r, j)) % p);
                if (!linfp::vec_is_zero(eq)) eqs.push_back(std::move(eq));
            }
        if (n) {
            const Matrix& prev = c.d[n - 1];
            for (std::uint32_t r = 0; r < rows; ++r)
                for (std::uint32_t cc = 0; cc < prev.cols(); ++cc) {
                    Vec eq(nunk, 0);
                    for (std::uint32_t j = 0; j < cols; ++j) eq[r * cols + j] = prev.at(j, cc);
                    if (!linfp::vec_is_zero(eq)) eqs.push_back(std::move(eq));
                }
        }
        Matrix sys = eqs.empty() ? Matrix(0, nunk, p) : Matrix::from_rows(eqs, nunk, p);
        Matrix sol = kernel_basis_matrix(sys);
        Vec coeff(sol.rows());
        for (std::uint32_t i = 0; i < sol.rows(); ++i) coeff[i] = static_cast<std::uint8_t>(rng.below(p));
        Vec flat = sol.apply_t(coeff);
        Matrix d(rows, cols, p);
        for (std::uint32_t r = 0; r < rows; ++r)
            for (std::uint32_t cc = 0; cc < cols; ++cc) d.set(r, cc, flat[r * cols + cc]);
        c.d.push_back(std::move(d));
    }
    c.provenance = hochschild::Provenance::Abstract;
    hochschild::verify_complex(c);
    return c;
}

}  // namespace dhh::instances
