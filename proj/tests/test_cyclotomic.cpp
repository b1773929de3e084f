#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zcpn/context.hpp"
#include "zcpn/cyclotomic.hpp"
#include "zcpn/serialize.hpp"

using namespace zcpn;

namespace {

CycInt from_list(long p, long n, std::initializer_list<long> v) {
    std::vector<Int> c;
    for (long x : v) c.emplace_back(x);
    return CycInt::from_coeffs(p, n, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomial closed form") {
    std::vector<Int> c92 = cyclotomic_poly(3, 2);
    CHECK(c92 == std::vector<Int>{1, 0, 0, 1, 0, 0, 1});  // x^6+x^3+1
    std::vector<Int> c23 = cyclotomic_poly(2, 3);
    CHECK(c23 == std::vector<Int>{1, 0, 0, 0, 1});  // x^4+1
    std::vector<Int> c51 = cyclotomic_poly(5, 1);
    CHECK(c51 == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(cyclotomic_poly(6, 1), std::invalid_argument);
}

TEST_CASE("mu basics") {
    CHECK(mu(3, 2, 1).is_one());
    // mu_{p^n - 1} = -theta^{p^n - 1}
    CHECK(mu(3, 2, 8) == -CycInt::theta_power(3, 2, 8));
    CHECK(mu(2, 3, 7) == -CycInt::theta_power(2, 3, 7));
    // mu_2 at (3,2) is a unit with integral inverse
    auto m2 = mu(3, 2, 2);
    CHECK(m2 == from_list(3, 2, {1, 1}));
    auto inv = m2.inverse();
    REQUIRE(inv.has_value());
    auto oracle = oracles::cyclotomic_inverse(m2);
    REQUIRE(oracle.has_value());
    CHECK(*inv == *oracle);
    // mu_i only depends on i mod p^n
    CHECK(mu(3, 2, 11) == mu(3, 2, 2));
}

TEST_CASE("theta reduction is canonical") {
    CHECK(CycInt::theta_power(3, 2, 9).is_one());
    CHECK(CycInt::theta_power(3, 2, -1) == CycInt::theta_power(3, 2, 8));
    // theta^6 = -1 - theta^3 for Phi_9
    CHECK(CycInt::theta_power(3, 2, 6) == from_list(3, 2, {-1, 0, 0, -1}));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        auto a = oracles::random_cyc(3, 2, rng);
        auto b = oracles::random_cyc(3, 2, rng);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("omega basics") {
    auto ctx = make_ctx(3, 2);
    for (long q : {2L, 4L, 5L, 7L})
        CHECK(omega(3, 2, q, 1) == mu(3, 2, q));
    CHECK(omega(3, 2, 1, 5).is_one());
    // product identity at (3,2), q = 2, s = 2
    CHECK(mu(3, 2, 4) == omega(3, 2, 2, 1) * omega(3, 2, 2, 2));
    (void)ctx;
}

TEST_CASE("mu product identity, all q and s per small case") {
    for (auto [p, n] : std::vector<std::pair<long, long>>{{3, 2}, {2, 3}, {5, 1}}) {
        long m = ipow(p, n);
        for (long q = 1; q < m; ++q) {
            if (q % p == 0) continue;
            CycInt prod = CycInt::one(p, n);
            Int qs = 1;
            for (long s = 1; s <= euler_phi_prime_power(p, n); ++s) {
                // prod over j < s of omega_{q, q^j}
                prod = prod * omega(p, n, q, qs);
                qs = qs * q % m;
                CHECK(mu(p, n, int_pow(Int(q), s)) == prod);
            }
        }
    }
}

TEST_CASE("negative index family: mu_i = -theta^i mu_{t^r}") {
    auto ctx = make_ctx(3, 2);
    long phi = ctx.phi;
    for (long r = 1; r <= phi / 2 - 1; ++r) {
        long j = r + phi / 2;
        long i = mod_pow(ctx.t, j, ctx.m);
        CHECK(mu(3, 2, i) ==
              -CycInt::theta_power(3, 2, i) * mu(3, 2, mod_pow(ctx.t, r, ctx.m)));
    }
    // p = 2 variant: i = (2^n - 1) 3^q gives mu_i = -theta^i mu_{3^q}
    for (long q = 1; q <= 1; ++q) {
        long i = ((ipow(2, 3) - 1) * ipow(3, q)) % ipow(2, 3);
        CHECK(mu(2, 3, i) == -CycInt::theta_power(2, 3, i) * mu(2, 3, ipow(3, q)));
    }
}

TEST_CASE("h_unit identities") {
    auto ctx = make_ctx(3, 2);
    auto mu_t = mu(3, 2, ctx.t);
    auto mu_t_inv = *mu_t.inverse();

    // mu_t^{-i} mu_{t^i} = h_1 ... h_{i-1}
    for (long i = 2; i <= ctx.kappa + 1; ++i) {
        CycInt lhs = mu_t_inv.pow(i) * mu(3, 2, mod_pow(ctx.t, i, ctx.m));
        CycInt rhs = CycInt::one(3, 2);
        for (long j = 1; j <= i - 1; ++j) rhs = rhs * h_unit(ctx, j);
        CHECK(lhs == rhs);
    }

    // h_i = (mu_t^{-(i+1)} mu_{t^{i+1}}) (mu_t^{-i} mu_{t^i})^{-1}
    for (long i = 1; i <= ctx.kappa; ++i) {
        CycInt a = mu_t_inv.pow(i + 1) * mu(3, 2, mod_pow(ctx.t, i + 1, ctx.m));
        CycInt b = mu_t_inv.pow(i) * mu(3, 2, mod_pow(ctx.t, i, ctx.m));
        CHECK(h_unit(ctx, i) == a * *b.inverse());
    }

    // omega_{t,1}^{-1} equals omega_{r,t}: mu_t * omega_{r,t} = mu_{rt} = 1
    CHECK(mu(3, 2, ctx.t) * omega(3, 2, ctx.r, ctx.t) == CycInt::one(3, 2));
}

TEST_CASE("generator families rewrite into each other") {
    // mu_{t^i} = mu_t^i * (mu_t^{-i} mu_{t^i}) links the two presentations of
    // the cyclotomic generator set in both directions
    for (auto [p, n] : std::vector<std::pair<long, long>>{{3, 2}, {2, 3}, {5, 2}}) {
        auto ctx = make_ctx(p, n);
        auto mu_t = mu(p, n, ctx.t);
        auto mu_t_inv = *mu_t.inverse();
        for (long i = 1; i <= ctx.kappa; ++i) {
            auto mu_ti = mu(p, n, mod_pow(ctx.t, i, ctx.m));
            CHECK(mu_ti == mu_t.pow(i) * (mu_t_inv.pow(i) * mu_ti));
            // quotient member recovered from S1 data
            CHECK(mu_t_inv.pow(i) * mu_ti == *mu_t.pow(i).inverse() * mu_ti);
        }
    }
}

TEST_CASE("cyc_inverse") {
    auto th = CycInt::theta_power(3, 2, 1);
    auto inv = th.inverse();
    REQUIRE(inv.has_value());
    CHECK(*inv == CycInt::theta_power(3, 2, 8));

    CHECK_FALSE(mu(3, 2, 3).inverse().has_value());  // gcd(3, 9) != 1

    auto m2inv = mu(3, 2, 2).inverse();
    REQUIRE(m2inv.has_value());
    CHECK((mu(3, 2, 2) * *m2inv).is_one());

    CHECK_FALSE(CycInt::zero(3, 2).inverse().has_value());
}

TEST_CASE("inverse agrees with the linear-system oracle on random units") {
    std::mt19937_64 rng(13);
    int units_seen = 0;
    for (int i = 0; i < 60; ++i) {
        auto a = oracles::random_cyc(3, 2, rng, 3);
        auto lib = a.inverse();
        auto orc = oracles::cyclotomic_inverse(a);
        CHECK(lib.has_value() == orc.has_value());
        if (lib) {
            ++units_seen;
            CHECK(*lib == *orc);
        }
    }
    CHECK(units_seen >= 1);
}

TEST_CASE("psi") {
    auto ctx = make_ctx(3, 2);
    for (long i = 1; i < 9; ++i) {
        if (i % 3 == 0) continue;
        CHECK(psi(mu(3, 2, i)) == i % 3);
    }
    CHECK(psi(CycInt::theta_power(3, 2, 1)) == 1);
    auto mu_t_inv = *mu(3, 2, ctx.t).inverse();
    for (long i = 2; i <= ctx.kappa; ++i)
        CHECK(psi(mu_t_inv.pow(i) * mu(3, 2, mod_pow(ctx.t, i, ctx.m))) == 1);
    CHECK_THROWS_AS(psi(CycInt::one(2, 3)), std::domain_error);
}

TEST_CASE("psi is multiplicative on units") {
    auto ctx = make_ctx(3, 2);
    std::vector<CycInt> units = {CycInt::theta_power(3, 2, 2), mu(3, 2, 2), mu(3, 2, 4),
                                 h_unit(ctx, 1), h_unit(ctx, 2)};
    std::mt19937_64 rng(19);
    for (int i = 0; i < 40; ++i) {
        const auto& a = units[rng() % units.size()];
        const auto& b = units[rng() % units.size()];
        CHECK(psi(a * b) == (psi(a) * psi(b)) % 3);
    }
}

TEST_CASE("embedding representatives are the ascending coprime half-range") {
    CHECK(embedding_representatives(3, 2) == std::vector<long>{1, 2, 4});
    CHECK(embedding_representatives(2, 3) == std::vector<long>{1, 3});
    for (auto [p, n] : std::vector<std::pair<long, long>>{{3, 3}, {2, 5}, {7, 2}}) {
        auto reps = embedding_representatives(p, n);
        CHECK(static_cast<long>(reps.size()) == euler_phi_prime_power(p, n) / 2);
        for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1] < reps[i]);
        for (long a : reps) CHECK(a % p != 0);
    }
}

TEST_CASE("log embedding of torsion is numerically zero") {
    auto lv = log_embedding(CycInt::theta_power(3, 2, 1), 128);
    CHECK(lv.entries.size() == 3);
    Real bound = Real::pow2(-64, 192);
    for (const auto& e : lv.entries) CHECK(e.abs() < bound);
}

TEST_CASE("log embedding entries of a unit sum to zero") {
    auto ctx = make_ctx(3, 2);
    auto u = -mu(3, 2, ctx.t).pow((3 - 1) / 2);
    auto lv = log_embedding(u, 128);
    Real sum(192);
    for (const auto& e : lv.entries) sum = sum + e;
    CHECK(sum.abs() < Real::pow2(-100, 192));
}

TEST_CASE("log vectors of h1 h2 at (3,2) have rank 2 by gram determinant") {
    auto ctx = make_ctx(3, 2);
    auto v1 = log_embedding(h_unit(ctx, 1), 256);
    auto v2 = log_embedding(h_unit(ctx, 2), 256);
    // independent oracle at doubled precision: the 2x2 Gram determinant of
    // the two vectors must be bounded away from zero
    auto dot = [](const LogVector& a, const LogVector& b) {
        Real s(512);
        for (std::size_t i = 0; i < a.entries.size(); ++i)
            s = s + a.entries[i] * b.entries[i];
        return s;
    };
    Real g11 = dot(v1, v1), g12 = dot(v1, v2), g22 = dot(v2, v2);
    Real det = g11 * g22 - g12 * g12;
    CHECK(det.abs() > Real::pow2(-40, 512));
}

TEST_CASE("cyc JSON round trip") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        auto a = oracles::random_cyc(2, 4, rng);
        auto j = to_json(a);
        CHECK(j["p"] == 2);
        CHECK(j["n"] == 4);
        CHECK(cyc_from_json(j) == a);
    }
}
