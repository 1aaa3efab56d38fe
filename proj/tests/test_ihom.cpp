#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhh/ihom.hpp"
#include "dhh/instances.hpp"
#include "dhh/tensorcat.hpp"

using namespace dhh::ihom;
using dhh::diffmod::DiffModule;
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

TEST_CASE("ihom(k, M) is M via evaluation at 1") {
    RandomSource rng(41);
    auto k = dhh::instances::field_ext_ring(2, true);
    DiffModule kmod = ring_module(k);
    DiffModule m = dhh::instances::random_module(rng, k, 2, true);
    IHom h = ihom(kmod, m);
    REQUIRE(h.carrier.dim == m.dim);
    Matrix ev(m.dim, h.carrier.dim, 2);
    for (std::uint32_t j = 0; j < h.carrier.dim; ++j) {
        Vec v = h.basis[j].apply(k->unit);
        for (std::uint32_t r = 0; r < m.dim; ++r) ev.set(r, j, v[r]);
    }
    CHECK(dhh::linfp::rank(ev) == m.dim);
    CHECK(dhh::diffmod::is_difference_linear(ev, h.carrier, m));
}

TEST_CASE("ihom(F_4, F_4) over F_4 has carrier dim 2 with Frobenius conjugation") {
    auto f4 = dhh::instances::field_ext_ring(2, true);
    DiffModule m = ring_module(f4);
    IHom h = ihom(m, m);
    // brute force: F_4-linear maps among the 16 F_2-linear maps
    std::uint32_t count = 0;
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        Matrix f(2, 2, 2);
        for (std::uint32_t i = 0; i < 4; ++i)
            if (bits >> i & 1) f.set(i / 2, i % 2, 1);
        if (f * m.act[1] == m.act[1] * f) ++count;
    }
    CHECK((1u << h.carrier.dim) == count);
    CHECK(h.carrier.dim == 2);
    CHECK(dhh::diffmod::validate(h.carrier).ok);
    CHECK(h.carrier.inversive());

    // sigma action is conjugation by Frobenius
    Matrix sinv = dhh::linfp::inverse(m.sigma);
    for (std::uint32_t j = 0; j < h.carrier.dim; ++j) {
        Matrix conj = m.sigma * h.basis[j] * sinv;
        Vec coords = h.from_matrix(conj);
        CHECK(h.carrier.sigma.apply(dhh::linfp::unit_vec(h.carrier.dim, j, 2)) == coords);
    }
}

TEST_CASE("identity sigma gives identity sigma action") {
    auto f2 = dhh::diffmod::prime_field(2);
    RandomSource rng(42);
    DiffModule m = dhh::instances::random_module(rng, f2, 2, false);
    m.sigma = Matrix::identity(2, 2);
    IHom h = ihom(m, m);
    CHECK(h.carrier.sigma.is_identity());
}

TEST_CASE("ihom requires inversive inputs") {
    auto f2 = dhh::diffmod::prime_field(2);
    DiffModule m;
    m.ring = f2;
    m.dim = 1;
    m.act = {Matrix::identity(1, 2)};
    m.sigma = Matrix::zero(1, 1, 2);
    CHECK_THROWS_AS(ihom(m, m), dhh::InversivityRequired);
}

TEST_CASE("eval is bilinear and respects sigma") {
    RandomSource rng(43);
    auto k = dhh::instances::field_ext_ring(2, true);
    DiffModule m = dhh::instances::random_module(rng, k, 1, true);
    DiffModule n = dhh::instances::random_module(rng, k, 2, true);
    IHom h = ihom(m, n);
    // eval(identity of ihom(M,M), x) = x
    IHom hm = ihom(m, m);
    Vec id_coords = hm.from_matrix(Matrix::identity(m.dim, 2));
    for (std::uint32_t i = 0; i < m.dim; ++i) {
        Vec x = dhh::linfp::unit_vec(m.dim, i, 2);
        CHECK(eval(hm, id_coords, x) == x);
    }
    CHECK(dhh::linfp::vec_is_zero(eval(h, Vec(h.carrier.dim, 0), dhh::linfp::unit_vec(m.dim, 0, 2))));
    // eval(sigma f, sigma_M x) = sigma_N eval(f, x)
    for (int t = 0; t < 10; ++t) {
        Vec f(h.carrier.dim);
        for (auto& c : f) c = static_cast<std::uint8_t>(rng.below(2));
        Vec x(m.dim);
        for (auto& c : x) c = static_cast<std::uint8_t>(rng.below(2));
        Vec lhs = eval(h, h.carrier.sigma.apply(f), m.sigma.apply(x));
        Vec rhs = n.sigma.apply(eval(h, f, x));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ihom_map functoriality") {
    RandomSource rng(44);
    auto k = dhh::instances::field_ext_ring(2, true);
    DiffModule m = dhh::instances::random_module(rng, k, 1, true);
    DiffModule n = dhh::instances::random_module(rng, k, 1, true);
    IHom hmm = ihom(m, m);
    IHom hnn = ihom(n, n);
    IHom hmn = ihom(m, n);
    CHECK(ihom_map(hmn, hmn, Matrix::identity(m.dim, 2), Matrix::identity(n.dim, 2)).is_identity());
    CHECK(ihom_map(hmn, hmn, Matrix::identity(m.dim, 2), Matrix::zero(n.dim, n.dim, 2)).is_zero());
    // functoriality on composable difference maps f, f', g, g'
    auto homs_m = dhh::diffmod::hom_diff(m, m);
    auto homs_n = dhh::diffmod::hom_diff(n, n);
    for (const auto& f : homs_m.basis)
        for (const auto& g : homs_n.basis) {
            Matrix lhs = ihom_map(hmn, hmn, f, g) * ihom_map(hmn, hmn, Matrix::identity(m.dim, 2), g);
            Matrix rhs = ihom_map(hmn, hmn, f, g * g);
            // contravariant in the first slot, covariant in the second:
            // [f, g][id, g] = [f, g g]
            CHECK(lhs == rhs);
        }
}

TEST_CASE("fix of the carrier is hom_diff") {
    RandomSource rng(45);
    for (int t = 0; t < 10; ++t) {
        auto k = dhh::instances::random_base_ring(rng, 2, true);
        DiffModule m = dhh::instances::random_module(rng, k, 1 + rng.below(2), true);
        DiffModule n = dhh::instances::random_module(rng, k, 1 + rng.below(2), true);
        IHom h = ihom(m, n);
        auto fixed = dhh::diffmod::fix_module(h.carrier);
        auto hd = dhh::diffmod::hom_diff(m, n);
        REQUIRE(fixed.dim() == hd.dim());
        // the fixed carrier vectors are exactly the difference maps
        for (std::uint32_t i = 0; i < fixed.dim(); ++i) {
            Matrix f = h.to_matrix(fixed.basis.row_vec(i));
            CHECK(dhh::diffmod::is_difference_linear(f, m, n));
        }
        // coinvariants are computable and match fix dim (square sigma - 1)
        CHECK(dhh::diffmod::coinv_module(h.carrier).dim() == fixed.dim());
    }
}

TEST_CASE("hom tensor adjunction") {
    RandomSource rng(46);
    for (int t = 0; t < 10; ++t) {
        auto k = dhh::instances::random_base_ring(rng, 3, true);
        DiffModule l = dhh::instances::random_module(rng, k, 1 + rng.below(2), true);
        DiffModule m = dhh::instances::random_module(rng, k, 1 + rng.below(2), true);
        DiffModule n = dhh::instances::random_module(rng, k, 1 + rng.below(2), true);
        auto lm = dhh::tensorcat::tensor(l, m);
        IHom mn = ihom(m, n);
        CHECK(dhh::diffmod::hom_diff(lm.result, n).dim() ==
              dhh::diffmod::hom_diff(l, mn.carrier).dim());
    }
}

namespace {

ShortExactSeq torsion_ses() {
    // B = F_2^2 with swap, C = F_2 trivial, q = (1 1); Fix is not exact here.
    auto f2 = dhh::diffmod::prime_field(2);
    ShortExactSeq s;
    s.mid.ring = f2;
    s.mid.dim = 2;
    s.mid.act = {Matrix::identity(2, 2)};
    s.mid.sigma = Matrix(2, 2, 2);
    s.mid.sigma.set(0, 1, 1);
    s.mid.sigma.set(1, 0, 1);
    s.quo.ring = f2;
    s.quo.dim = 1;
    s.quo.act = {Matrix::identity(1, 2)};
    s.quo.sigma = Matrix::identity(1, 2);
    s.sub = s.quo;
    s.inj = Matrix(2, 1, 2);
    s.inj.set(0, 0, 1);
    s.inj.set(1, 0, 1);
    s.surj = Matrix(1, 2, 2);
    s.surj.set(0, 0, 1);
    s.surj.set(0, 1, 1);
    return s;
}

}  // namespace

TEST_CASE("projectivity witness") {
    ShortExactSeq s = torsion_ses();
    verify_ses(s);

    // x = k always passes the internal (k-linear) side; the Fix side fails on
    // this sigma-torsion sequence.
    auto f2 = dhh::diffmod::prime_field(2);
    DiffModule x;
    x.ring = f2;
    x.dim = 1;
    x.act = {Matrix::identity(1, 2)};
    x.sigma = Matrix::identity(1, 2);
    auto rep = internal_projectivity_witness(x, s);
    CHECK(rep.internal_surjective);
    CHECK(!rep.fix_surjective);
    CHECK(!rep.pass());

    // a split SES passes both
    ShortExactSeq split;
    split.sub = x;
    split.quo = x;
    split.mid = x;
    split.mid.dim = 2;
    split.mid.act = {Matrix::identity(2, 2)};
    split.mid.sigma = Matrix::identity(2, 2);
    split.inj = Matrix(2, 1, 2);
    split.inj.set(0, 0, 1);
    split.surj = Matrix(1, 2, 2);
    split.surj.set(0, 1, 1);
    auto rep2 = internal_projectivity_witness(x, split);
    CHECK(rep2.pass());
}

TEST_CASE("windowed free-shift witness passes even on sigma-torsion sequences") {
    ShortExactSeq s = torsion_ses();
    auto rep = windowed_shift_projectivity(1, 3, 3, s);
    CHECK(rep.window_dims_match);
    CHECK(rep.internal_surjective);
    CHECK(rep.fix_surjective);
    CHECK(rep.pass());
    CHECK_THROWS_AS(windowed_shift_projectivity(1, 3, 1, s), dhh::WindowTooSmall);
}

TEST_CASE("tensor of truncated free shifts stays windowed-projective") {
    // The product of two depth-D truncated shifts decomposes into diagonal
    // chains of lengths D-|d|; the tensor of the two modules is the chain sum,
    // so the windowed witness must pass chain by chain.
    ShortExactSeq s = torsion_ses();
    const std::uint32_t D = 3;
    std::uint32_t total = 0;
    for (std::int32_t d = -(std::int32_t)D + 1; d < (std::int32_t)D; ++d) {
        std::uint32_t len = D - static_cast<std::uint32_t>(d < 0 ? -d : d);
        total += len;
        auto rep = windowed_shift_projectivity(1, len, 3, s);
        CHECK(rep.pass());
    }
    CHECK(total == D * D);  // chains exhaust the product set
}
