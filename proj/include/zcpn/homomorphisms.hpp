#pragma once

#include <optional>

#include "zcpn/cyclotomic.hpp"
#include "zcpn/group_ring.hpp"

namespace zcpn {

/// g |-> theta: Z C_{p^n} -> Z[theta], reduced mod Phi_{p^n}.
CycInt pi1(const GroupRingElem& a);

/// g |-> h: Z C_{p^n} -> Z C_{p^{n-1}} (exponents mod p^{n-1}); needs n >= 2.
GroupRingElem pi2(const GroupRingElem& a);

/// Coefficientwise reduction mod p (the natural map Z C_m -> F_p C_m).
GroupRingElem f1(const GroupRingElem& a, long p);

/// theta |-> h with coefficients mod p: Z[theta] -> F_p C_{p^{n-1}}; n >= 2.
GroupRingElem f2(const CycInt& u);

/// Element of ker(pi1) restricted to units: 1 + sum_j a_j g^j P where P is
/// the period sum g^0 + g^{p^{n-1}} + ... + g^{(p-1)p^{n-1}}.
struct KernelElem {
    long p = 0;
    long n = 0;
    std::vector<Int> a;  // p^{n-1} integers

    GroupRingElem expand() const;
};

/// Recovers the kernel parametrization of w, or nullopt when w - 1 is not in
/// the ideal generated by the period sum.
std::optional<KernelElem> ker_pi1_parametrize(const GroupRingElem& w);

}  // namespace zcpn
