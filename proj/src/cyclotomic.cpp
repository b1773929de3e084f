#include "zcpn/cyclotomic.hpp"

#include <sstream>

#include "ratpoly.hpp"

namespace zcpn {

namespace {

long phi_of(long p, long n) { return euler_phi_prime_power(p, n); }

/// Reduce a dense coefficient vector (any length, exponents already below
/// p^n) modulo Phi_{p^n}.  Uses theta^{(p-1)p^{n-1}+s} = -sum_{j<p-1}
/// theta^{j p^{n-1}+s} repeatedly, highest exponent first.
void reduce_mod_cyclotomic(std::vector<Int>& c, long p, long n) {
    long phi = phi_of(p, n);
    long step = ipow(p, n - 1);
    for (long e = static_cast<long>(c.size()) - 1; e >= phi; --e) {
        Int v = c[static_cast<std::size_t>(e)];
        if (v == 0) continue;
        c[static_cast<std::size_t>(e)] = 0;
        long s = e - phi;  // 0 <= s < p^{n-1} when e < p^n
        for (long j = 0; j < p - 1; ++j)
            c[static_cast<std::size_t>(j * step + s)] -= v;
    }
    c.resize(static_cast<std::size_t>(phi));
}

}  // namespace

std::vector<Int> cyclotomic_poly(long p, long n) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    long phi = phi_of(p, n);
    long step = ipow(p, n - 1);
    std::vector<Int> out(static_cast<std::size_t>(phi) + 1, Int(0));
    for (long j = 0; j < p; ++j) out[static_cast<std::size_t>(j * step)] = 1;
    return out;
}

CycInt::CycInt(long p, long n) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    c_.assign(static_cast<std::size_t>(phi_of(p, n)), Int(0));
}

CycInt CycInt::zero(long p, long n) { return CycInt(p, n); }

CycInt CycInt::one(long p, long n) { return constant(p, n, 1); }

CycInt CycInt::constant(long p, long n, const Int& c) {
    CycInt r(p, n);
    r.c_[0] = c;
    return r;
}

CycInt CycInt::theta_power(long p, long n, const Int& e) {
    CycInt r(p, n);
    long m = ipow(p, n);
    Int em = e % m;
    if (em < 0) em += m;
    std::vector<Int> c(static_cast<std::size_t>(m), Int(0));
    c[static_cast<std::size_t>(em.get_si())] = 1;
    reduce_mod_cyclotomic(c, p, n);
    r.c_ = std::move(c);
    return r;
}

CycInt CycInt::from_coeffs(long p, long n, std::vector<Int> coeffs) {
    CycInt r(p, n);
    if (static_cast<long>(coeffs.size()) > ipow(p, n))
        throw std::invalid_argument("coefficient vector too long");
    coeffs.resize(static_cast<std::size_t>(ipow(p, n)), Int(0));
    reduce_mod_cyclotomic(coeffs, p, n);
    r.c_ = std::move(coeffs);
    return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("cyclotomic context mismatch");
    CycInt r(p_, n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("cyclotomic context mismatch");
    CycInt r(p_, n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("cyclotomic context mismatch");
    std::vector<Int> prod(2 * c_.size(), Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce_mod_cyclotomic(prod, p_, n_);
    CycInt r(p_, n_);
    r.c_ = std::move(prod);
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(p_, n_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::pow(const Int& e) const {
    if (e < 0) {
        auto inv = inverse();
        if (!inv) throw std::domain_error("negative power of a non-unit");
        return inv->pow(-e);
    }
    CycInt result = one(p_, n_);
    CycInt base = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::optional<CycInt> CycInt::inverse() const {
    if (is_zero()) return std::nullopt;
    detail::QPoly u(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) u[i] = Rat(c_[i]);
    detail::trim(u);
    auto phi_poly = cyclotomic_poly(p_, n_);
    detail::QPoly M(phi_poly.size());
    for (std::size_t i = 0; i < phi_poly.size(); ++i) M[i] = Rat(phi_poly[i]);
    auto inv = detail::qp_inverse_mod(u, M);
    if (!inv) return std::nullopt;  // cannot happen: Phi irreducible, u != 0
    auto ints = detail::qp_integral(*inv, c_.size());
    if (!ints) return std::nullopt;
    CycInt r(p_, n_);
    r.c_ = std::move(*ints);
    if (!((*this) * r).is_one()) return std::nullopt;
    return r;
}

bool CycInt::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycInt::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CycInt::is_root_of_unity() const {
    long m = ipow(p_, n_);
    for (long k = 0; k < m; ++k) {
        CycInt t = theta_power(p_, n_, k);
        if (*this == t || *this == -t) return true;
    }
    return false;
}

std::string CycInt::to_string(std::string_view symbol) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int mag = abs(c_[i]);
        bool neg = c_[i] < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str();
            out << symbol;
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    return out.str();
}

std::string CycInt::digest() const {
    return fnv1a_digest("cyc/" + std::to_string(p_) + "/" + std::to_string(n_) + "/" +
                        to_string("t"));
}

CycInt mu(long p, long n, const Int& i) {
    if (i < 1) throw std::invalid_argument("mu requires i >= 1");
    long m = ipow(p, n);
    // 1 + theta + ... + theta^{i-1}; complete blocks of length p^n sum to zero
    long rest = static_cast<long>(Int(i % m).get_si());
    std::vector<Int> c(static_cast<std::size_t>(m), Int(0));
    for (long e = 0; e < rest; ++e) c[static_cast<std::size_t>(e)] = 1;
    return CycInt::from_coeffs(p, n, std::move(c));
}

CycInt omega(long p, long n, const Int& q, const Int& s) {
    if (q < 1) throw std::invalid_argument("omega requires q >= 1");
    long m = ipow(p, n);
    std::vector<Int> c(static_cast<std::size_t>(m), Int(0));
    Int smod = s % m;
    if (smod < 0) smod += m;
    long sl = static_cast<long>(smod.get_si());
    // exponents j*s mod p^n cycle with period m/gcd(s,m); each position in
    // the cycle is hit floor(q/cyc) times, the first q mod cyc once more
    long g = sl == 0 ? m : static_cast<long>(Int(gcd(Int(sl), Int(m))).get_si());
    long cyc = m / g;
    Int full = q / cyc;
    long rest = static_cast<long>(Int(q % cyc).get_si());
    long e = 0;
    for (long j = 0; j < cyc; ++j) {
        c[static_cast<std::size_t>(e)] += full + (j < rest ? 1 : 0);
        e = (e + sl) % m;
    }
    return CycInt::from_coeffs(p, n, std::move(c));
}

CycInt h_unit(const PrimePowerCtx& ctx, long i) {
    if (i < 1 || i > ctx.kappa) throw std::invalid_argument("h_unit index out of range");
    CycInt w1 = omega(ctx.p, ctx.n, ctx.t, 1);
    auto w1_inv = w1.inverse();
    if (!w1_inv) throw std::logic_error("omega_{t,1} unexpectedly not a unit");
    Int ti;
    mpz_powm_ui(ti.get_mpz_t(), Int(ctx.t).get_mpz_t(), static_cast<unsigned long>(i),
                Int(ctx.m).get_mpz_t());
    return (*w1_inv) * omega(ctx.p, ctx.n, ctx.t, ti);
}

long psi(const CycInt& u) {
    if (u.p() == 2) throw std::domain_error("psi is only defined for odd p");
    Int s = 0;
    for (const auto& x : u.coeffs()) s += x;
    s %= u.p();
    if (s < 0) s += u.p();
    return s.get_si();
}

std::vector<long> embedding_representatives(long p, long n) {
    long m = ipow(p, n);
    std::vector<long> reps;
    for (long a = 1; 2 * a < m; ++a)
        if (a % p != 0) reps.push_back(a);
    return reps;
}

LogVector log_embedding(const CycInt& u, long precision) {
    long guard = 64;
    long wp = precision + guard;
    long m = ipow(u.p(), u.n());
    auto reps = embedding_representatives(u.p(), u.n());

    LogVector lv;
    lv.precision = precision;
    lv.err_bound = Real::pow2(-(precision - 16), wp);
    lv.entries.reserve(reps.size());

    Real two_pi = Real::from_long(2, wp) * Real::pi(wp);
    const auto& c = u.coeffs();
    for (long a : reps) {
        Real angle = two_pi * Real::from_long(a, wp) / Real::from_long(m, wp);
        Real zr = angle.cos(), zi = angle.sin();
        // Horner evaluation at (zr, zi)
        Real re = Real::from_int(c.back(), wp), im(wp);
        for (long j = static_cast<long>(c.size()) - 2; j >= 0; --j) {
            Real nre = re * zr - im * zi + Real::from_int(c[static_cast<std::size_t>(j)], wp);
            Real nim = re * zi + im * zr;
            re = nre;
            im = nim;
        }
        lv.entries.push_back(re.hypot(im).log());
    }
    return lv;
}

}  // namespace zcpn
