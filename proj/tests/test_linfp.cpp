#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhh/instances.hpp"
#include "dhh/matrix.hpp"

using namespace dhh::linfp;
using dhh::instances::RandomSource;

namespace {

Matrix random_matrix(RandomSource& rng, std::uint32_t r, std::uint32_t c, std::uint32_t p) {
    Matrix m(r, c, p);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < c; ++j) m.set(i, j, rng.below(p));
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Matrix::identity(3, 2)) == 3);
    CHECK(rank(Matrix::zero(2, 2, 2)) == 0);
    Matrix m(2, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, 1);
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(Matrix::identity(4, 3)).dim() == 0);
    CHECK(kernel_basis(Matrix::zero(2, 3, 5)).dim() == 3);
    Matrix m(1, 2, 2);
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    Subspace k = kernel_basis(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis.at(0, 0) == 1);
    CHECK(k.basis.at(0, 1) == 1);
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
    RandomSource rng(2);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int t = 0; t < 40; ++t) {
            std::uint32_t r = 1 + rng.below(12), c = 1 + rng.below(12);
            Matrix m = random_matrix(rng, r, c, p);
            Subspace k = kernel_basis(m);
            CHECK(rank(m) + k.dim() == c);
            for (std::uint32_t i = 0; i < k.dim(); ++i)
                CHECK(vec_is_zero(m.apply(k.basis.row_vec(i))));
        }
    }
}

TEST_CASE("subquotient dims and containment error") {
    Subspace full = Subspace::full(2, 2);
    Subspace zero = Subspace::zero(2, 2);
    CHECK(subquotient(full, full).dim == 0);
    CHECK(subquotient(full, zero).dim == 2);
    Matrix diag(1, 2, 2);
    diag.set(0, 0, 1);
    diag.set(0, 1, 1);
    Subspace line = Subspace::from_rows(diag);
    CHECK(subquotient(full, line).dim == 1);
}

TEST_CASE("subquotient refuses non-contained coboundaries") {
    Matrix e0(1, 2, 2);
    e0.set(0, 0, 1);
    Matrix e1(1, 2, 2);
    e1.set(0, 1, 1);
    Subspace a = Subspace::from_rows(e0), b = Subspace::from_rows(e1);
    CHECK_THROWS_AS(subquotient(a, b), dhh::ContainmentViolation);
}

TEST_CASE("subquotient additivity on random data") {
    RandomSource rng(3);
    for (int t = 0; t < 30; ++t) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[rng.below(3)];
        std::uint32_t n = 2 + rng.below(8);
        Matrix big = random_matrix(rng, 1 + rng.below(n), n, p);
        Subspace coc = Subspace::from_rows(big);
        // coboundaries: random combinations of cocycles
        Matrix comb = random_matrix(rng, 1 + rng.below(n), coc.dim(), p);
        Subspace cob = coc.dim() ? Subspace::from_rows(comb * coc.basis) : Subspace::zero(n, p);
        auto sq = subquotient(coc, cob);
        CHECK(sq.dim + cob.dim() == coc.dim());
    }
}

TEST_CASE("packed and generic rref agree on 1000 random F_2 matrices up to 256x256") {
    RandomSource rng(4);
    for (int t = 0; t < 1000; ++t) {
        std::uint32_t r = 1 + rng.below(256), c = 1 + rng.below(256);
        Matrix m(r, c, 2);
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < c; ++j) m.set(i, j, rng.below(2));
        RrefResult a = rref_generic(m);
        RrefResult b = rref_packed_f2(m);
        REQUIRE(a.pivots == b.pivots);
        REQUIRE(a.rref == b.rref);
    }
}

TEST_CASE("span solver coordinates") {
    RandomSource rng(5);
    for (int t = 0; t < 30; ++t) {
        std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[rng.below(3)];
        std::uint32_t n = 3 + rng.below(8);
        Matrix raw = random_matrix(rng, 1 + rng.below(n), n, p);
        Matrix basis = row_space(raw);
        if (basis.rows() == 0) continue;
        SpanSolver sol(basis);
        Vec coeff(basis.rows());
        for (auto& x : coeff) x = static_cast<std::uint8_t>(rng.below(p));
        Vec w = basis.apply_t(coeff);
        auto c = sol.coords(w);
        REQUIRE(c.has_value());
        CHECK(basis.apply_t(*c) == w);
    }
}

TEST_CASE("inverse and solve") {
    RandomSource rng(6);
    for (std::uint32_t p : {2u, 5u}) {
        Matrix m = dhh::instances::random_invertible(rng, 6, p);
        Matrix mi = inverse(m);
        CHECK((m * mi).is_identity());
        Vec b(6);
        for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(p));
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
    CHECK_THROWS_AS(inverse(Matrix::zero(2, 2, 2)), dhh::SingularMatrix);
}

TEST_CASE("elimination at large primes") {
    RandomSource rng(7);
    for (std::uint32_t p : {101u, 251u}) {
        for (int t = 0; t < 10; ++t) {
            std::uint32_t r = 1 + rng.below(20), c = 1 + rng.below(20);
            Matrix m = random_matrix(rng, r, c, p);
            RrefResult rr = rref(m, true);
            CHECK(rr.transform * m == rr.rref);
            CHECK(rank(m) + kernel_basis(m).dim() == c);
        }
        Matrix inv_target = dhh::instances::random_invertible(rng, 8, p);
        CHECK((inv_target * inverse(inv_target)).is_identity());
    }
}

TEST_CASE("matrix construction rejects non-prime modulus") {
    CHECK_THROWS_AS(Matrix(1, 1, 4), dhh::AxiomViolation);
    CHECK_THROWS_AS(Matrix(1, 1, 255), dhh::AxiomViolation);
}
