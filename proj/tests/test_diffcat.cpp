#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhh/diffcat.hpp"
#include "dhh/diffmod.hpp"
#include "dhh/instances.hpp"

using namespace dhh::diffcat;
using dhh::diffmod::DiffModule;
using dhh::linfp::Matrix;
using dhh::linfp::rank;

TEST_CASE("fix of basic difference sets") {
    CHECK(fix(DiffSet(2, {1, 0})).empty());                    // swap
    CHECK(fix(DiffSet::identity(3)).size() == 3);
    // F_4 under x -> x^2, elements enumerated through the field tables.
    auto f4 = dhh::instances::field_ext_ring(2, true);
    std::vector<dhh::linfp::Vec> elems = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    std::vector<std::uint32_t> sq(4);
    for (std::uint32_t i = 0; i < 4; ++i) {
        auto s = f4->mul_vec(elems[i], elems[i]);
        for (std::uint32_t j = 0; j < 4; ++j)
            if (s == elems[j]) sq[i] = j;
    }
    DiffSet frob(4, sq);
    CHECK(fix(frob) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("quo partitions") {
    CHECK(quo(DiffSet::identity(4)).size() == 4);
    CHECK(quo(DiffSet(2, {1, 0})).size() == 1);
    CHECK(quo(DiffSet(3, {1, 2, 2})).size() == 1);  // chain collapses
    // classes partition and e ~ sigma(e)
    DiffSet x(6, {1, 0, 3, 3, 5, 4});
    auto classes = quo(x);
    std::uint32_t total = 0;
    for (const auto& c : classes) {
        total += static_cast<std::uint32_t>(c.size());
        for (auto e : c) {
            bool same = false;
            for (auto f : c) same |= (f == x.sigma[e]);
            CHECK(same);
        }
    }
    CHECK(total == x.size);
    CHECK(fix(x).size() <= x.size);
    CHECK(classes.size() <= x.size);
}

TEST_CASE("free shift truncations") {
    TruncatedShift t = free_shift(1, 3);
    CHECK(t.size() == 3);
    CHECK(t.partial);
    CHECK(t.sigma(t.index(0, 0)) == t.index(0, 1));
    CHECK(t.sigma_defined(t.index(0, 1)));
    CHECK(!t.sigma_defined(t.index(0, 2)));
    CHECK(free_shift(0, 5).size() == 0);
    TruncatedShift one = free_shift(2, 1);
    CHECK(one.size() == 2);
    CHECK(!one.sigma_defined(0));
    CHECK_THROWS_AS(free_shift(1, 0), dhh::WindowTooSmall);
}

namespace {

DiffModule f2_trivial() {
    DiffModule m;
    m.ring = dhh::diffmod::prime_field(2);
    m.dim = 1;
    m.act = {Matrix::identity(1, 2)};
    m.sigma = Matrix::identity(1, 2);
    return m;
}

}  // namespace

TEST_CASE("set tensor") {
    DiffModule m = f2_trivial();
    // one fixed point: M itself
    DiffModule same = set_tensor(DiffSet::identity(1), m);
    CHECK(same.dim == m.dim);
    CHECK(same.sigma == m.sigma);
    // swap: sigma is the swap matrix
    DiffModule sw = set_tensor(DiffSet(2, {1, 0}), m);
    CHECK(sw.dim == 2);
    CHECK(sw.sigma.at(0, 1) == 1);
    CHECK(sw.sigma.at(1, 0) == 1);
    CHECK(sw.sigma.at(0, 0) == 0);
    // 3-cycle: sigma of order 3
    DiffModule cyc = set_tensor(DiffSet::cycle(3), m);
    CHECK(cyc.dim == 3);
    CHECK(!cyc.sigma.is_identity());
    CHECK(!cyc.sigma.pow(2).is_identity());
    CHECK(cyc.sigma.pow(3).is_identity());
    CHECK(dhh::diffmod::validate(cyc).ok);
}

TEST_CASE("set tensor invertibility and dims") {
    auto k = dhh::instances::field_ext_ring(2, true);
    dhh::instances::RandomSource rng(11);
    DiffModule m = dhh::instances::random_module(rng, k, 2, true);
    DiffSet e(3, {1, 2, 0});
    DiffModule t = set_tensor(e, m);
    CHECK(t.dim == e.size * m.dim);
    CHECK(dhh::diffmod::validate(t).ok);
    CHECK(t.inversive());
    // non-bijective sigma_E kills invertibility
    DiffSet collapse(2, {0, 0});
    DiffModule t2 = set_tensor(collapse, m);
    CHECK(!t2.inversive());
}

TEST_CASE("truncated set tensor is a valid module with nilpotent-top sigma") {
    DiffModule m = f2_trivial();
    TruncatedShift e = free_shift(2, 3);
    DiffModule t = set_tensor_truncated(e, m);
    CHECK(t.dim == 6);
    CHECK(dhh::diffmod::validate(t).ok);
    CHECK(!t.inversive());
}

TEST_CASE("adjunction counting at depth 1") {
    TruncatedShift e = free_shift(2, 1);
    DiffSet x(3, {1, 2, 0});
    // |Hom_Set(S, X)| = |X|^|S|
    CHECK(count_truncation_respecting_maps(e, x) == 9);
}
