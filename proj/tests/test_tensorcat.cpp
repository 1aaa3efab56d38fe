#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhh/instances.hpp"
#include "dhh/tensorcat.hpp"

using namespace dhh::tensorcat;
using dhh::diffmod::DiffModule;
using dhh::diffmod::validate;
using dhh::instances::RandomSource;
using dhh::linfp::Matrix;
using dhh::linfp::Vec;

namespace {

DiffModule ring_module(dhh::diffmod::DiffRingPtr k) {
    DiffModule m;
    m.ring = k;
    m.dim = k->dim;
    for (std::uint32_t i = 0; i < k->dim; ++i) m.act.push_back(k->basis_mult_matrix(i));
    m.sigma = k->sigma;
    return m;
}

}  // namespace

TEST_CASE("tensor over the prime field multiplies dims") {
    auto f2 = dhh::diffmod::prime_field(2);
    RandomSource rng(31);
    DiffModule m = dhh::instances::random_module(rng, f2, 2, true);
    DiffModule n = dhh::instances::random_module(rng, f2, 3, true);
    TensorModule t = tensor(m, n);
    CHECK(t.result.dim == 6);
    CHECK(validate(t.result).ok);
}

TEST_CASE("tensor of F_4 with itself over F_4 has F_2-dimension 2") {
    auto f4 = dhh::instances::field_ext_ring(2, true);
    DiffModule m = ring_module(f4);
    TensorModule t = tensor(m, m);
    CHECK(t.result.dim == 2);
    CHECK(validate(t.result).ok);
    // tensor(k, k) = k
    CHECK(tensor(m, m).result.dim == f4->dim);
}

TEST_CASE("pure tensor balancing and sigma descent") {
    RandomSource rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        auto k = dhh::instances::random_base_ring(rng, 2, true);
        DiffModule m = dhh::instances::random_module(rng, k, 1 + rng.below(2), true);
        DiffModule n = dhh::instances::random_module(rng, k, 1 + rng.below(2), true);
        TensorModule t = tensor(m, n);
        const std::uint32_t p = 2;
        for (std::uint32_t lam = 0; lam < k->dim; ++lam)
            for (std::uint32_t i = 0; i < m.dim; ++i)
                for (std::uint32_t j = 0; j < n.dim; ++j) {
                    Vec mi = dhh::linfp::unit_vec(m.dim, i, p);
                    Vec nj = dhh::linfp::unit_vec(n.dim, j, p);
                    CHECK(t.pure(m.act[lam].apply(mi), nj) == t.pure(mi, n.act[lam].apply(nj)));
                    // sigma descends through pure tensors
                    CHECK(t.result.sigma.apply(t.pure(mi, nj)) ==
                          t.pure(m.sigma.apply(mi), n.sigma.apply(nj)));
                }
        // projection is surjective: rank = result dim
        CHECK(dhh::linfp::rank(t.projection) == t.result.dim);
    }
}

TEST_CASE("tensor_map functoriality") {
    auto f2 = dhh::diffmod::prime_field(2);
    RandomSource rng(33);
    DiffModule m = dhh::instances::random_module(rng, f2, 2, true);
    DiffModule n = dhh::instances::random_module(rng, f2, 1, true);
    TensorModule t = tensor(m, n);
    Matrix id2 = Matrix::identity(2, 2), id1 = Matrix::identity(1, 2);
    CHECK(tensor_map(t, t, id2, id1).is_identity());
    CHECK(tensor_map(t, t, Matrix::zero(2, 2, 2), id1).is_zero());
    // swap (x) id acts as a permutation on the result
    Matrix swap(2, 2, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    Matrix sm = tensor_map(t, t, swap, id1);
    CHECK(dhh::linfp::rank(sm) == t.result.dim);
    for (std::uint32_t i = 0; i < 2; ++i) {
        Vec mi = dhh::linfp::unit_vec(2, i, 2);
        Vec nj = dhh::linfp::unit_vec(1, 0, 2);
        CHECK(sm.apply(t.pure(mi, nj)) == t.pure(swap.apply(mi), nj));
    }
    // (f'f) (x) (g'g) = (f' (x) g')(f (x) g) on random pairs
    for (int trial = 0; trial < 5; ++trial) {
        auto rnd = [&](std::uint32_t d) {
            Matrix x(d, d, 2);
            for (std::uint32_t r = 0; r < d; ++r)
                for (std::uint32_t c = 0; c < d; ++c) x.set(r, c, rng.below(2));
            return x;
        };
        Matrix f = rnd(2), f2m = rnd(2), g = rnd(1), g2 = rnd(1);
        CHECK(tensor_map(t, t, f2m * f, g2 * g) ==
              tensor_map(t, t, f2m, g2) * tensor_map(t, t, f, g));
    }
}

TEST_CASE("tensor powers and contraction faces") {
    auto inst = dhh::instances::preset("classical-dual-numbers");
    auto tp = tensor_powers(inst.algebra, 3, 1 << 20);
    CHECK(tp.power[0].dim == 1);                    // k
    CHECK(tp.power[1].dim == inst.algebra->dim());  // A
    CHECK(tp.power[3].dim == 8);
    // delta_1(a (x) b (x) c) = ab (x) c on basis triples
    Matrix d1 = tp.delta(3, 1);
    const std::uint32_t da = inst.algebra->dim();
    for (std::uint32_t i = 0; i < da; ++i)
        for (std::uint32_t j = 0; j < da; ++j)
            for (std::uint32_t l = 0; l < da; ++l) {
                Vec lhs = d1.apply(tp.pure_cols[3].col_vec((i * da + j) * da + l));
                Vec prod = inst.algebra->mult[i][j];
                Vec rhs(tp.power[2].dim, 0);
                for (std::uint32_t s = 0; s < da; ++s)
                    if (prod[s])
                        rhs = dhh::linfp::vec_add(
                            rhs,
                            dhh::linfp::vec_scale(tp.pure_cols[2].col_vec(s * da + l), prod[s], 2), 2);
                CHECK(lhs == rhs);
            }
    CHECK_THROWS_AS(tensor_powers(inst.algebra, 30, 1 << 10), dhh::DegreeOverflow);
}

TEST_CASE("enveloping algebra") {
    auto inst = dhh::instances::preset("classical-dual-numbers");
    Enveloping env = enveloping(inst.algebra);
    CHECK(env.env->dim() == 4);
    CHECK(validate(*env.env).ok);
    // unit acts as the identity on the regular bimodule
    auto acts = env.actions_on(inst.bimodule);
    Matrix unit_act(inst.bimodule.dim(), inst.bimodule.dim(), 2);
    for (std::uint32_t u = 0; u < env.env->dim(); ++u)
        if (env.env->unit[u]) unit_act = unit_act + acts[u].scaled(env.env->unit[u]);
    CHECK(unit_act.is_identity());
    // (a (x) b) m = a m b on basis pairs
    const std::uint32_t da = inst.algebra->dim();
    for (std::uint32_t i = 0; i < da; ++i)
        for (std::uint32_t j = 0; j < da; ++j) {
            Vec cls = env.structure.pure(dhh::linfp::unit_vec(da, i, 2), dhh::linfp::unit_vec(da, j, 2));
            Matrix act(inst.bimodule.dim(), inst.bimodule.dim(), 2);
            for (std::uint32_t u = 0; u < env.env->dim(); ++u)
                if (cls[u]) act = act + acts[u].scaled(cls[u]);
            CHECK(act == inst.bimodule.left[i] * inst.bimodule.right[j]);
        }
    // enveloping of random valid algebras validates
    RandomSource rng(34);
    for (int t = 0; t < 100; ++t) {
        auto r = dhh::instances::random_instance(rng, {2, true, 512, 512});
        CHECK(validate(*enveloping(r.algebra).env).ok);
    }
}

TEST_CASE("universal property fixed examples") {
    auto f2 = dhh::diffmod::prime_field(2);
    DiffModule k2 = ring_module(f2);
    auto rep = universal_check(k2, k2, k2);
    CHECK(rep.dim_balanced == 1);
    CHECK(rep.dim_hom == 1);
    CHECK(rep.pass());

    auto f4 = dhh::instances::field_ext_ring(2, true);
    DiffModule m = ring_module(f4);
    auto rep4 = universal_check(m, m, m);
    CHECK(rep4.dims_equal);
    CHECK(rep4.factorization_ok);
}

TEST_CASE("unit iso and associator") {
    RandomSource rng(35);
    auto k = dhh::instances::field_ext_ring(2, true);
    DiffModule m = dhh::instances::random_module(rng, k, 2, true);
    DiffModule kmod = ring_module(k);
    auto mk = tensor(m, kmod);
    auto u = unit_iso(m, mk);
    CHECK(u.is_iso);
    CHECK(u.difference_linear);

    // re-bracketing is an isomorphism on 50 random triples
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[rng.below(3)];
        auto kk = dhh::instances::random_base_ring(rng, p, true);
        std::uint32_t cap = kk->dim > 2 ? 1 : 2;
        DiffModule a = dhh::instances::random_module(rng, kk, 1 + rng.below(cap), true);
        DiffModule b = dhh::instances::random_module(rng, kk, 1 + rng.below(cap), true);
        DiffModule c = dhh::instances::random_module(rng, kk, 1 + rng.below(cap), true);
        auto ab = tensor(a, b);
        auto bc = tensor(b, c);
        auto ab_c = tensor(ab.result, c);
        auto a_bc = tensor(a, bc.result);
        auto assoc = associator(ab, ab_c, bc, a_bc, a.dim, b.dim, c.dim);
        CHECK(ab_c.result.dim == a_bc.result.dim);
        CHECK(assoc.is_iso);
    }
}
