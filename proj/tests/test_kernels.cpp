#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "dhh/instances.hpp"
#include "dhh/kernels.hpp"

using namespace dhh::linfp;
using dhh::instances::RandomSource;

TEST_CASE("scalar and active kernels agree on random buffers") {
    const Kernels& sc = scalar_kernels();
    const Kernels& ac = active_kernels();
    RandomSource rng(1);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 251u}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 1 + rng.below(300);
            std::vector<std::uint8_t> a(n), b(n);
            for (auto& x : a) x = static_cast<std::uint8_t>(rng.below(p));
            for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(p));
            std::uint32_t c = 1 + rng.below(p - 1);

            auto a1 = a, a2 = a;
            sc.axpy_rows(a1.data(), b.data(), c, n, p);
            ac.axpy_rows(a2.data(), b.data(), c, n, p);
            REQUIRE(a1 == a2);

            auto s1 = a, s2 = a;
            sc.scale_row(s1.data(), c, n, p);
            ac.scale_row(s2.data(), c, n, p);
            REQUIRE(s1 == s2);
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng.below(64);
        std::vector<std::uint64_t> a(n), b(n);
        for (auto& x : a) x = rng.next();
        for (auto& x : b) x = rng.next();
        auto a1 = a, a2 = a;
        sc.xor_rows(a1.data(), b.data(), n);
        ac.xor_rows(a2.data(), b.data(), n);
        REQUIRE(a1 == a2);
    }
}

TEST_CASE("kernel selection is reported") {
    const Kernels& ac = active_kernels();
    CHECK(ac.name != nullptr);
    if (avx2_available()) {
        CHECK(force_kernels("avx2"));
        CHECK(std::string(active_kernels().name) == "avx2");
    }
    CHECK(force_kernels("scalar"));
    CHECK(std::string(active_kernels().name) == "scalar");
    force_kernels(nullptr);
}
