#include "zcpn/homomorphisms.hpp"

namespace zcpn {

namespace {

std::pair<long, long> prime_power_context(long m) {
    for (long p = 2; p <= m; ++p) {
        if (!is_prime(p)) continue;
        long n = power_of(m, p);
        if (n > 0) return {p, n};
    }
    throw std::invalid_argument("modulus is not a prime power");
}

}  // namespace

CycInt pi1(const GroupRingElem& a) {
    if (a.characteristic() != 0) throw std::invalid_argument("pi1 needs Z coefficients");
    auto [p, n] = prime_power_context(a.order());
    return CycInt::from_coeffs(p, n, a.coeffs());
}

GroupRingElem pi2(const GroupRingElem& a) {
    if (a.characteristic() != 0) throw std::invalid_argument("pi2 needs Z coefficients");
    auto [p, n] = prime_power_context(a.order());
    if (n < 2) throw std::invalid_argument("pi2 needs n >= 2");
    long m = a.order() / p;
    std::vector<Int> c(static_cast<std::size_t>(m), Int(0));
    for (long i = 0; i < a.order(); ++i) c[static_cast<std::size_t>(i % m)] += a.coeff(i);
    return GroupRingElem::from_coeffs(m, 0, std::move(c));
}

GroupRingElem f1(const GroupRingElem& a, long p) {
    if (a.characteristic() != 0) throw std::invalid_argument("f1 needs Z coefficients");
    return GroupRingElem::from_coeffs(a.order(), p, a.coeffs());
}

GroupRingElem f2(const CycInt& u) {
    if (u.n() < 2) throw std::invalid_argument("f2 needs n >= 2");
    long m = ipow(u.p(), u.n() - 1);
    std::vector<Int> c(static_cast<std::size_t>(m), Int(0));
    for (long i = 0; i < u.degree_bound(); ++i)
        c[static_cast<std::size_t>(i % m)] += u.coeffs()[static_cast<std::size_t>(i)];
    return GroupRingElem::from_coeffs(m, u.p(), std::move(c));
}

GroupRingElem KernelElem::expand() const {
    long m = ipow(p, n);
    long sub = ipow(p, n - 1);
    std::vector<Int> c(static_cast<std::size_t>(m), Int(0));
    c[0] = 1;
    for (long j = 0; j < sub; ++j)
        for (long i = 0; i < p; ++i) c[static_cast<std::size_t>(j + i * sub)] += a[static_cast<std::size_t>(j)];
    return GroupRingElem::from_coeffs(m, 0, std::move(c));
}

std::optional<KernelElem> ker_pi1_parametrize(const GroupRingElem& w) {
    if (w.characteristic() != 0) throw std::invalid_argument("kernel elements live over Z");
    auto [p, n] = prime_power_context(w.order());
    if (n < 2) throw std::invalid_argument("kernel parametrization needs n >= 2");
    long sub = ipow(p, n - 1);
    std::vector<Int> diff = w.coeffs();
    diff[0] -= 1;
    // the coefficient of g^{j + i p^{n-1}} must be a_j for every i
    KernelElem k{p, n, std::vector<Int>(static_cast<std::size_t>(sub), Int(0))};
    for (long j = 0; j < sub; ++j) {
        const Int& a0 = diff[static_cast<std::size_t>(j)];
        for (long i = 1; i < p; ++i)
            if (diff[static_cast<std::size_t>(j + i * sub)] != a0) return std::nullopt;
        k.a[static_cast<std::size_t>(j)] = a0;
    }
    return k;
}

}  // namespace zcpn
