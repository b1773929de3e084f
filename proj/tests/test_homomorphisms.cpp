#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zcpn/homomorphisms.hpp"
#include "zcpn/kernel_lift.hpp"
#include "zcpn/units.hpp"

using namespace zcpn;

TEST_CASE("pi1 examples") {
    auto ctx = make_ctx(3, 2);
    CHECK(pi1(hoechsmann_unit(ctx, 1)) == h_unit(ctx, 1));
    CHECK(pi1(GroupRingElem::monomial(9, 0, 1)) == CycInt::theta_power(3, 2, 1));

    // the period-sum ideal maps to zero
    std::mt19937_64 rng(2);
    std::vector<Int> per(9, Int(0));
    per[0] = per[3] = per[6] = 1;
    auto period = GroupRingElem::from_coeffs(9, 0, per);
    for (int i = 0; i < 20; ++i) {
        auto any = oracles::random_element(9, 0, rng);
        CHECK(pi1(period * any).is_zero());
    }
    CHECK_THROWS_AS(pi1(GroupRingElem::one(6, 0)), std::invalid_argument);
    CHECK_THROWS_AS(pi1(GroupRingElem::one(9, 3)), std::invalid_argument);
}

TEST_CASE("pi2 examples") {
    // pi2 of a kernel element is 1 + p * (a_0 + a_1 h + ...)
    KernelElem ke{3, 2, {Int(2), Int(-1), Int(4)}};
    auto w = ke.expand();
    auto img = pi2(w);
    CHECK(img == GroupRingElem::from_coeffs(3, 0, {Int(7), Int(-3), Int(12)}));

    CHECK(pi2(GroupRingElem::monomial(9, 0, 3)).is_one());
    CHECK_THROWS_AS(pi2(GroupRingElem::one(3, 0)), std::invalid_argument);

    auto ctx = make_ctx(3, 3);
    auto img2 = pi2(hoechsmann_unit(ctx, 1));
    CHECK(img2.order() == 9);
    CHECK(img2.augmentation() == 1);  // augmentation oracle
    CHECK(img2.inverse().has_value());
}

TEST_CASE("f1 and f2 examples") {
    auto u1 = GroupRingElem::from_coeffs(
        9, 0, {Int(-1), Int(1), Int(-1), Int(1), Int(0), Int(0), Int(1), Int(-1), Int(1)});
    CHECK(to_x_basis(f1(u1, 3)).to_string() == "1 + 2x^4 + 2x^5 + x^6 + x^7 + x^8");

    // f1(1 + 9 * anything) = 1 for p = 3
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto any = oracles::random_element(9, 0, rng);
        std::vector<Int> c = any.coeffs();
        for (auto& x : c) x *= 9;
        c[0] += 1;
        CHECK(f1(GroupRingElem::from_coeffs(9, 0, c), 3).is_one());
    }

    CHECK_THROWS_AS(f2(CycInt::one(5, 1)), std::invalid_argument);
}

TEST_CASE("commutative diagram f2 pi1 = f1 pi2") {
    std::mt19937_64 rng(7);
    for (auto [p, n] : std::vector<std::pair<long, long>>{{3, 2}, {3, 3}, {2, 3}, {2, 4}, {5, 2}}) {
        long m = ipow(p, n);
        for (int i = 0; i < 100; ++i) {
            auto a = oracles::random_element(m, 0, rng);
            CHECK(f2(pi1(a)) == f1(pi2(a), p));
        }
        // and on the constructed units
        auto ctx = make_ctx(p, n);
        for (long i = 1; i <= std::min(ctx.kappa, 4L); ++i) {
            auto th = hoechsmann_unit(ctx, i);
            CHECK(f2(pi1(th)) == f1(pi2(th), p));
        }
    }
}

TEST_CASE("the four maps are ring homomorphisms") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto a = oracles::random_element(27, 0, rng);
        auto b = oracles::random_element(27, 0, rng);
        CHECK(pi1(a * b) == pi1(a) * pi1(b));
        CHECK(pi1(a + b) == pi1(a) + pi1(b));
        CHECK(pi2(a * b) == pi2(a) * pi2(b));
        CHECK(pi2(a + b) == pi2(a) + pi2(b));
        CHECK(f1(a * b, 3) == f1(a, 3) * f1(b, 3));
        CHECK(f1(a + b, 3) == f1(a, 3) + f1(b, 3));
        auto ca = oracles::random_cyc(3, 3, rng);
        auto cb = oracles::random_cyc(3, 3, rng);
        CHECK(f2(ca * cb) == f2(ca) * f2(cb));
        CHECK(f2(ca + cb) == f2(ca) + f2(cb));
    }
}

TEST_CASE("kernel parametrization examples") {
    CaseStore store;
    const AssemblyResult& r27 = store.assembly(3, 3);
    REQUIRE(r27.kernel.size() == 2);
    auto k1 = ker_pi1_parametrize(r27.kernel[0]);
    REQUIRE(k1.has_value());
    CHECK(k1->a == std::vector<Int>{-12, 11, -9, 6, -2, -2, 6, -9, 11});
    auto k2 = ker_pi1_parametrize(r27.kernel[1]);
    REQUIRE(k2.has_value());
    CHECK(k2->a == std::vector<Int>{6, -6, 5, -3, 1, 1, -3, 5, -6});

    auto id = ker_pi1_parametrize(GroupRingElem::one(27, 0));
    REQUIRE(id.has_value());
    for (const auto& x : id->a) CHECK(x == 0);

    CHECK_FALSE(ker_pi1_parametrize(GroupRingElem::monomial(27, 0, 1)).has_value());
}

TEST_CASE("kernel expansion round trip and pi1 kernel membership") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<long> dist(-6, 6);
        KernelElem ke{3, 3, {}};
        for (int j = 0; j < 9; ++j) ke.a.emplace_back(dist(rng));
        auto w = ke.expand();
        CHECK(pi1(w).is_one());
        auto back = ker_pi1_parametrize(w);
        REQUIRE(back.has_value());
        CHECK(back->a == ke.a);
    }
}

TEST_CASE("certified kernel elements are symmetric; pi2 restricted is injective") {
    CaseStore store;
    for (auto [p, n] : std::vector<std::pair<long, long>>{{3, 3}, {3, 4}, {2, 4}, {2, 5}}) {
        const AssemblyResult& r = store.assembly(p, n);
        for (const auto& w : r.kernel) {
            if (p != 2) {
                CHECK(w.is_symmetric());
            } else {
                auto wi = w.involution();
                bool sym = (wi == w) || (wi == w.shift(ipow(p, n) / 2));
                CHECK(sym);
            }
        }
        // distinct parametrizations map to distinct pi2 images
        for (std::size_t i = 0; i < r.kernel.size(); ++i)
            for (std::size_t j = i + 1; j < r.kernel.size(); ++j) {
                CHECK_FALSE(r.kernel[i] == r.kernel[j]);
                CHECK_FALSE(pi2(r.kernel[i]) == pi2(r.kernel[j]));
            }
    }
}
