#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace zcpn {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Returns j >= 0 with p^j == m, or -1 if m is not a power of p.
inline long power_of(long m, long p) {
    if (m < 1 || p < 2) return -1;
    long j = 0;
    while (m % p == 0) { m /= p; ++j; }
    return m == 1 ? j : -1;
}

inline long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline long euler_phi_prime_power(long p, long n) {
    return ipow(p, n) - ipow(p, n - 1);
}

inline long mod_pow(long base, long exp, long mod) {
    Int r;
    mpz_powm_ui(r.get_mpz_t(), Int(base).get_mpz_t(), static_cast<unsigned long>(exp),
                Int(mod).get_mpz_t());
    return r.get_si();
}

inline Int int_pow(const Int& base, long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

/// Multiplicative order of t modulo m; throws if gcd(t, m) != 1.
inline long multiplicative_order(long t, long m) {
    if (mpz_class(gcd(Int(t), Int(m))) != 1)
        throw std::invalid_argument("multiplicative_order: arguments not coprime");
    long o = 1;
    long x = ((t % m) + m) % m;
    long cur = x;
    while (cur != 1) {
        Int next = Int(cur) * x % m;
        cur = next.get_si();
        if (++o > m) throw std::logic_error("multiplicative_order: did not terminate");
    }
    return o;
}

/// Smallest positive primitive root modulo p^n (p odd prime).
inline long smallest_primitive_root(long p, long n) {
    long m = ipow(p, n);
    long target = euler_phi_prime_power(p, n);
    for (long t = 2; t < m; ++t) {
        if (t % p == 0) continue;
        if (multiplicative_order(t, m) == target) return t;
    }
    throw std::logic_error("no primitive root found");
}

inline long mod_inverse(long a, long m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(a).get_mpz_t(), Int(m).get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible");
    return r.get_si();
}

/// FNV-1a content digest, used to identify elements inside certificates.
inline std::string fnv1a_digest(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace zcpn
