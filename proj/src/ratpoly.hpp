#pragma once

// Dense polynomial arithmetic over Q, internal to the library.  Coefficients
// ascending.  Only what the exact inverse computations need.

#include <optional>
#include <vector>

#include "zcpn/numeric.hpp"

namespace zcpn::detail {

using QPoly = std::vector<Rat>;

inline void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree(const QPoly& a) { return static_cast<long>(a.size()) - 1; }

inline QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline QPoly qp_scale(QPoly a, const Rat& s) {
    for (auto& c : a) c *= s;
    trim(a);
    return a;
}

/// Remainder of a modulo b (b nonzero).
inline QPoly qp_rem(QPoly a, const QPoly& b) {
    trim(a);
    long db = degree(b);
    while (degree(a) >= db) {
        Rat f = a.back() / b.back();
        long shiftBy = degree(a) - db;
        for (long i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(i + shiftBy)] -= f * b[static_cast<std::size_t>(i)];
        trim(a);
    }
    return a;
}

inline QPoly qp_divmod(QPoly& a, const QPoly& b) {
    trim(a);
    long db = degree(b);
    QPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    while (degree(a) >= db) {
        Rat f = a.back() / b.back();
        long shiftBy = degree(a) - db;
        q[static_cast<std::size_t>(shiftBy)] = f;
        for (long i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(i + shiftBy)] -= f * b[static_cast<std::size_t>(i)];
        trim(a);
    }
    trim(q);
    return q;
}

/// Inverse of u modulo the monic polynomial M over Q, via the extended
/// Euclidean algorithm with monic normalization at every step.  Returns
/// nullopt when gcd(u, M) != 1 (zero divisor).
inline std::optional<QPoly> qp_inverse_mod(const QPoly& u, const QPoly& M) {
    QPoly r0 = M, r1 = qp_rem(u, M);
    QPoly s0 = {}, s1 = {Rat(1)};
    if (r1.empty()) return std::nullopt;
    while (true) {
        // keep r1 monic; scale its Bezout coefficient identically
        Rat lead = r1.back();
        if (lead != 1) {
            Rat inv = Rat(1) / lead;
            r1 = qp_scale(r1, inv);
            s1 = qp_scale(s1, inv);
        }
        if (degree(r1) == 0) return s1;  // r1 == 1
        QPoly a = r0;
        QPoly q = qp_divmod(a, r1);
        // a is now r0 mod r1
        QPoly s2 = qp_sub(s0, qp_mul(q, s1));
        r0 = r1;
        s0 = s1;
        r1 = a;
        s1 = s2;
        if (r1.empty()) return std::nullopt;  // gcd has positive degree
    }
}

inline std::optional<std::vector<Int>> qp_integral(const QPoly& a, std::size_t size) {
    std::vector<Int> out(size, Int(0));
    if (a.size() > size) return std::nullopt;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].get_den() != 1) return std::nullopt;
        out[i] = a[i].get_num();
    }
    return out;
}

}  // namespace zcpn::detail
