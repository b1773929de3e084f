#pragma once

#include <string>
#include <vector>

#include "zcpn/context.hpp"
#include "zcpn/cyclotomic.hpp"
#include "zcpn/group_ring.hpp"
#include "zcpn/independence.hpp"

namespace zcpn {

enum class SetName { S1, S2, U, U0, Uprime, SHoechsmann, KernelGens };

std::string to_string(SetName n);
SetName set_name_from_string(const std::string& s);

/// A named generator family together with its unit certificates.  Members
/// live in Z[theta] (cyclotomic sets) or in the group ring (S, kernel sets).
struct UnitSystem {
    PrimePowerCtx ctx;
    SetName name = SetName::S1;
    std::vector<CycInt> cyc_members;
    std::vector<GroupRingElem> ring_members;
    std::vector<Certificate> certificates;
};

/// Builds one of the named families; every member is reduced and certified to
/// be a unit by an exact inverse.
UnitSystem build_set(const PrimePowerCtx& ctx, SetName name);

/// The Hoechsmann unit of Z C_{p^n}:
///   (1 + g^t + ... + g^{(r-1)t})(1 + g^{t^i} + ... + g^{(t-1)t^i}) - k ghat,
/// normalized (augmentation 1), with pi1 image h_i.
GroupRingElem hoechsmann_unit(const PrimePowerCtx& ctx, long i);

/// The auxiliary normalized unit of Z C_{p^{n-1}} used by the hypothesis
/// verification, together with its explicit inverse:
///   varpi = (-1)^p mu_t(h)^{phi(p^{n-1})/2} - (-1)^p lambda hhat.
/// Throws when lambda or lambda' is not integral (for in-scope cases that
/// happens only at (p, n) = (2, 3), where the defining congruence
/// t^{phi(p^{n-1})/2} = (-1)^p mod p^{n-1} fails).
struct VarpiPair {
    GroupRingElem unit;
    GroupRingElem inverse;
    Int lambda;
    Int lambda_prime;
};

VarpiPair varpi(const PrimePowerCtx& ctx);

}  // namespace zcpn
