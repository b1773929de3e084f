#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vendor_json.hpp"
#include "zcpn/cyclotomic.hpp"
#include "zcpn/group_ring.hpp"

namespace zcpn {

enum class CertKind { ExactFinite, LeadingTerm, LogRank, IndexCount, Hypothesis };
enum class Verdict { Independent, Dependent, Indeterminate, Holds, Fails, Agree, Mismatch };

std::string to_string(CertKind k);
std::string to_string(Verdict v);

/// Machine-checkable evidence record.  A Dependent verdict always carries a
/// witness relation that re-verifies by direct multiplication; log-rank
/// certificates record both precisions and their agreement.
struct Certificate {
    CertKind kind = CertKind::ExactFinite;
    std::vector<std::string> inputs;  // element digests
    Verdict verdict = Verdict::Indeterminate;
    nlohmann::json witness;
    long precision_used = 0;
    long precision_verify = 0;
};

/// Free rank of U(ZG) for finite abelian G: (|G0| - 2l + m + 1)/2 with l the
/// number of cyclic subgroups and m the number of order-2 subgroups.
long higman_rank(long g0_order, long num_cyclic, long num_order2);

/// Leading-term criterion: elements 1 + a x^{p^i q} + ... with p-free parts q
/// pairwise distinct are multiplicatively independent.  Applicable only under
/// that hypothesis; otherwise Indeterminate (fall back to the exact decider).
Certificate leading_term_independent(const std::vector<XAdicElem>& us);

/// Exhaustive decision of multiplicative independence inside U_1(F_p C_{p^j})
/// by element orders and subgroup enumeration.  Requires the ambient group
/// size p^{p^j - 1} <= 2^20; larger ambients raise a capacity error pointing
/// at the leading-term criterion.
Certificate exact_finite_independent(const std::vector<XAdicElem>& us);

/// Numerical independence certificate over the free part of U(Z[theta]):
/// log-embedding matrix has full rank at the given precision and at twice the
/// precision.  Torsion inputs (+- theta^k) are rejected.  Labeled a numerical
/// certificate everywhere; it is not a formal proof.
Certificate log_rank_independent(const std::vector<CycInt>& us, long precision);

/// Echelonized description of the subgroup of U_1(F_p C_{p^j}) generated by a
/// set of normalized units.  The basis elements carry leading x-exponents
/// with pairwise distinct p-free parts, which makes them independent by the
/// leading-term criterion, and makes membership decidable by greedy leading
/// term cancellation.
class FpSubgroup {
  public:
    static FpSubgroup span(long m, long p, std::vector<XAdicElem> gens);

    const std::vector<XAdicElem>& basis() const { return basis_; }
    long modulus() const { return m_; }
    long prime() const { return p_; }

    /// Orders of the basis elements.
    std::vector<Int> basis_orders() const;
    /// Subgroup size: product of the basis orders.
    Int size() const;

    /// Expresses e as a product of basis powers: returns exponents w (one per
    /// basis element, 0 <= w_j < order_j) with e == prod basis_j^{w_j}, or
    /// nullopt when e is not a member.
    std::optional<std::vector<Int>> express(const XAdicElem& e) const;
    bool contains(const XAdicElem& e) const { return express(e).has_value(); }

  private:
    long m_ = 0, p_ = 0;
    std::vector<XAdicElem> basis_;
};

/// p-free part q and valuation i of d = q * p^i.
std::pair<long, long> p_free_part(long d, long p);

}  // namespace zcpn
