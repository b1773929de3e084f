#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcpn/numeric.hpp"

namespace zcpn {

class XAdicElem;

/// Element of the group ring R C_m for a cyclic group of order m, with
/// R = Z (characteristic 0) or R = Z/pZ (characteristic p).  Coefficients
/// are stored densely: coeff(i) multiplies g^i.  All operations are pure;
/// mixing different (m, characteristic) contexts raises.
class GroupRingElem {
  public:
    GroupRingElem(long m, long characteristic);

    static GroupRingElem zero(long m, long characteristic = 0);
    static GroupRingElem one(long m, long characteristic = 0);
    /// c * g^e (exponent reduced mod m).
    static GroupRingElem monomial(long m, long characteristic, long e, const Int& c = 1);
    /// Sum of all group elements, 1 + g + ... + g^{m-1}.
    static GroupRingElem group_sum(long m, long characteristic = 0);
    static GroupRingElem from_coeffs(long m, long characteristic, std::vector<Int> coeffs);

    long order() const { return m_; }
    long characteristic() const { return char_; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(long i) const { return c_.at(static_cast<std::size_t>(i)); }

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    bool operator==(const GroupRingElem& o) const = default;

    /// Multiplication by g^k, exponent taken mod m (k may be negative).
    GroupRingElem shift(long k) const;

    /// g^i |-> g^{-i}; an involution of the ring.
    GroupRingElem involution() const;

    /// Coefficient sum (in Z, or reduced mod p in characteristic p).
    Int augmentation() const;

    /// s = sum_i i*coeff(i) mod m.  For a normalized unit u, u * g^{-s} is
    /// congruent to 1 modulo the squared augmentation ideal, so s locates the
    /// group-element component of u.
    long aug_weight() const;

    /// Repeated-squaring power.  Negative exponents require a unit.
    GroupRingElem pow(const Int& e) const;

    /// Exact inverse, or nullopt when the element is not a unit of R C_m.
    /// Characteristic 0 uses exact rational arithmetic (per cyclotomic factor
    /// for m = p^n, generic extended Euclid mod x^m - 1 otherwise) and accepts
    /// only integral results; characteristic p works over the field F_p.
    std::optional<GroupRingElem> inverse() const;

    bool is_symmetric() const { return involution() == *this; }
    bool is_normalized() const { return augmentation() == 1; }
    /// Membership of (this - 1) in the square of the augmentation ideal,
    /// decided against a Hermite normal form of the lattice spanned by the
    /// products (g^i - 1)(g^j - 1).
    bool is_u2() const;

    bool is_zero() const;
    bool is_one() const { return *this == one(m_, char_); }

    /// Canonical text form: signed terms by ascending exponent.
    std::string to_string(std::string_view symbol = "g") const;
    std::string digest() const;

  private:
    void reduce_();
    long m_;
    long char_;
    std::vector<Int> c_;
};

/// Element of F_p C_{p^j} written in the x-adic basis, x = h - 1.  The powers
/// x^0, ..., x^{m-1} form a basis and x^m = 0, so the algebra is the truncated
/// polynomial ring F_p[x]/(x^m).
class XAdicElem {
  public:
    XAdicElem(long m, long p);
    static XAdicElem one(long m, long p);
    static XAdicElem from_terms(long m, long p, std::vector<long> terms);

    long order() const { return m_; }
    long prime() const { return p_; }
    const std::vector<long>& terms() const { return t_; }
    long term(long i) const { return t_.at(static_cast<std::size_t>(i)); }

    XAdicElem operator*(const XAdicElem& o) const;
    bool operator==(const XAdicElem& o) const = default;
    XAdicElem pow(const Int& e) const;

    /// Smallest i >= 1 with a nonzero x^i term, with that coefficient.
    /// nullopt for the identity.
    std::optional<std::pair<long, long>> leading() const;

    /// Order in the unit group (the element must have constant term 1):
    /// the least p^k with leading degree * p^k >= m.
    Int unit_order() const;

    bool is_one() const;

    std::string to_string(std::string_view symbol = "x") const;
    std::string digest() const;

  private:
    long m_;
    long p_;
    std::vector<long> t_;
};

/// Basis change F_p C_{p^j} <-> F_p[x]/(x^{p^j}).  to_x_basis requires the
/// modulus to be a power of the coefficient characteristic.
XAdicElem to_x_basis(const GroupRingElem& a);
GroupRingElem from_x_basis(const XAdicElem& a);

}  // namespace zcpn
