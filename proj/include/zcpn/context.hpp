#pragma once

#include <optional>

#include "zcpn/numeric.hpp"

namespace zcpn {

/// Scalar parameters of one prime-power case C_{p^n}.
///
/// t generates the units of Z/p^n (odd p: the smallest primitive root unless
/// overridden; p = 2: fixed 3, whose residue has order 2^{n-2} for n >= 3).
/// r is the least positive integer with t*r = 1 mod p^n and k = (t*r - 1)/p^n.
/// kappa = phi(p^n)/2 - 1 counts the free cyclotomic generators.
struct PrimePowerCtx {
    long p = 0;
    long n = 0;
    long m = 0;  // p^n
    long phi = 0;
    long t = 0;
    long kappa = 0;
    long r = 0;
    Int k = 0;
    bool trivial = false;  // p = 2 and n <= 2: the unit group is just +-C_{2^n}

    bool operator==(const PrimePowerCtx&) const = default;
};

/// Builds the case context.  Deterministic; throws on non-prime p.  A t
/// override must be a verified generator (odd p) and is rejected for p = 2.
PrimePowerCtx make_ctx(long p, long n, std::optional<long> t_override = std::nullopt);

}  // namespace zcpn
