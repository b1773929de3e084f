#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "zcpn/numeric.hpp"

namespace zcpn {

/// Thin RAII wrapper around an mpfr_t at a fixed working precision.
class Real {
  public:
    explicit Real(long prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }

    static Real from_long(long x, long prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real from_int(const Int& x, long prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real pi(long prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e as a Real.
    static Real pow2(long e, long prec) {
        Real r(prec);
        mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(a.prec()); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(a.prec()); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(a.prec()); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(a.prec()); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    Real operator-() const { Real r(*this); mpfr_neg(r.v_, r.v_, MPFR_RNDN); return r; }

    Real abs() const { Real r(*this); mpfr_abs(r.v_, r.v_, MPFR_RNDN); return r; }
    Real log() const { Real r(prec()); mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    Real cos() const { Real r(prec()); mpfr_cos(r.v_, v_, MPFR_RNDN); return r; }
    Real sin() const { Real r(prec()); mpfr_sin(r.v_, v_, MPFR_RNDN); return r; }
    Real hypot(const Real& o) const {
        Real r(prec()); mpfr_hypot(r.v_, v_, o.v_, MPFR_RNDN); return r;
    }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

  private:
    mpfr_t v_;
};

}  // namespace zcpn
