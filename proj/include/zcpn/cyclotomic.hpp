#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zcpn/context.hpp"
#include "zcpn/numeric.hpp"
#include "zcpn/real.hpp"

namespace zcpn {

/// Element of Z[theta] = Z[x]/Phi_{p^n}(x), theta a primitive p^n-th root of
/// unity.  Stored as the unique reduced representative of degree below
/// phi(p^n); reduction is canonical, so equality is coefficient equality.
class CycInt {
  public:
    CycInt(long p, long n);
    static CycInt zero(long p, long n);
    static CycInt one(long p, long n);
    static CycInt constant(long p, long n, const Int& c);
    /// theta^e, exponent reduced mod p^n first (negative allowed).
    static CycInt theta_power(long p, long n, const Int& e);
    static CycInt from_coeffs(long p, long n, std::vector<Int> coeffs);

    long p() const { return p_; }
    long n() const { return n_; }
    long degree_bound() const { return static_cast<long>(c_.size()); }  // phi(p^n)
    const std::vector<Int>& coeffs() const { return c_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    bool operator==(const CycInt& o) const = default;

    CycInt pow(const Int& e) const;

    /// Exact inverse over Z[theta]: extended Euclid against Phi_{p^n} over Q,
    /// accepted only when integral.  nullopt = not a unit.
    std::optional<CycInt> inverse() const;

    bool is_zero() const;
    bool is_one() const;
    /// Exact test for +- theta^k (the full torsion of the unit group).
    bool is_root_of_unity() const;

    std::string to_string(std::string_view symbol = "\xce\xb8") const;  // theta
    std::string digest() const;

  private:
    long p_, n_;
    std::vector<Int> c_;
};

/// Phi_{p^n}(x) = sum_{j<p} x^{j p^{n-1}}; ascending coefficients, degree
/// phi(p^n).
std::vector<Int> cyclotomic_poly(long p, long n);

/// mu_i = 1 + theta + ... + theta^{i-1}.  A unit iff gcd(i, p^n) = 1.
CycInt mu(long p, long n, const Int& i);

/// omega_{q,s} = 1 + theta^s + theta^{2s} + ... + theta^{(q-1)s}.
CycInt omega(long p, long n, const Int& q, const Int& s);

/// h_i = omega_{t,1}^{-1} omega_{t,t^i}, a unit of Z[theta].
CycInt h_unit(const PrimePowerCtx& ctx, long i);

/// Coefficient sum mod p (theta |-> 1).  Multiplicative on units.  Only
/// defined for odd p.
long psi(const CycInt& u);

/// Logarithmic embedding data for one unit: log|sigma_a(u)| over one
/// representative a per conjugate pair {a, -a}, ascending a < p^n/2 coprime
/// to p.  err_bound is a conservative rounding bound for each entry.
struct LogVector {
    std::vector<Real> entries;
    long precision = 0;
    Real err_bound;
};

LogVector log_embedding(const CycInt& u, long precision);

/// The conjugate-pair representatives, ascending.
std::vector<long> embedding_representatives(long p, long n);

}  // namespace zcpn
