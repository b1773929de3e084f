#include "zcpn/group_ring.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ratpoly.hpp"

namespace zcpn {

namespace {

void require_same_context(const GroupRingElem& a, const GroupRingElem& b) {
    if (a.order() != b.order() || a.characteristic() != b.characteristic())
        throw std::invalid_argument("group ring context mismatch: (" +
                                    std::to_string(a.order()) + "," +
                                    std::to_string(a.characteristic()) + ") vs (" +
                                    std::to_string(b.order()) + "," +
                                    std::to_string(b.characteristic()) + ")");
}

Int mod_reduce(const Int& v, long p) {
    Int r = v % p;
    if (r < 0) r += p;
    return r;
}

/// Text form shared by all element types: signed terms, ascending exponent.
std::string render_terms(const std::vector<Int>& c, std::string_view symbol) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int mag = abs(c[i]);
        bool neg = c[i] < 0;
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

}  // namespace

GroupRingElem::GroupRingElem(long m, long characteristic)
    : m_(m), char_(characteristic), c_(static_cast<std::size_t>(m), Int(0)) {
    if (m < 1) throw std::invalid_argument("group order must be positive");
    if (characteristic != 0 && !is_prime(characteristic))
        throw std::invalid_argument("coefficient characteristic must be 0 or prime");
}

GroupRingElem GroupRingElem::zero(long m, long characteristic) {
    return GroupRingElem(m, characteristic);
}

GroupRingElem GroupRingElem::one(long m, long characteristic) {
    return monomial(m, characteristic, 0);
}

GroupRingElem GroupRingElem::monomial(long m, long characteristic, long e, const Int& c) {
    GroupRingElem r(m, characteristic);
    long idx = ((e % m) + m) % m;
    r.c_[static_cast<std::size_t>(idx)] = c;
    r.reduce_();
    return r;
}

GroupRingElem GroupRingElem::group_sum(long m, long characteristic) {
    GroupRingElem r(m, characteristic);
    for (auto& x : r.c_) x = 1;
    r.reduce_();
    return r;
}

GroupRingElem GroupRingElem::from_coeffs(long m, long characteristic, std::vector<Int> coeffs) {
    if (static_cast<long>(coeffs.size()) != m)
        throw std::invalid_argument("coefficient count must equal the group order");
    GroupRingElem r(m, characteristic);
    r.c_ = std::move(coeffs);
    r.reduce_();
    return r;
}

void GroupRingElem::reduce_() {
    if (char_ == 0) return;
    for (auto& x : c_) x = mod_reduce(x, char_);
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    require_same_context(*this, o);
    GroupRingElem r(m_, char_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    r.reduce_();
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    require_same_context(*this, o);
    GroupRingElem r(m_, char_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    r.reduce_();
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    require_same_context(*this, o);
    GroupRingElem r(m_, char_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[(i + j) % static_cast<std::size_t>(m_)] += c_[i] * o.c_[j];
        }
    }
    r.reduce_();
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r(m_, char_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    r.reduce_();
    return r;
}

GroupRingElem GroupRingElem::shift(long k) const {
    GroupRingElem r(m_, char_);
    long s = ((k % m_) + m_) % m_;
    for (long i = 0; i < m_; ++i)
        r.c_[static_cast<std::size_t>((i + s) % m_)] = c_[static_cast<std::size_t>(i)];
    return r;
}

GroupRingElem GroupRingElem::involution() const {
    GroupRingElem r(m_, char_);
    for (long i = 0; i < m_; ++i)
        r.c_[static_cast<std::size_t>((m_ - i) % m_)] = c_[static_cast<std::size_t>(i)];
    return r;
}

Int GroupRingElem::augmentation() const {
    Int s = 0;
    for (const auto& x : c_) s += x;
    if (char_ != 0) s = mod_reduce(s, char_);
    return s;
}

long GroupRingElem::aug_weight() const {
    Int s = 0;
    for (long i = 0; i < m_; ++i) s += Int(i) * c_[static_cast<std::size_t>(i)];
    s %= m_;
    if (s < 0) s += m_;
    return s.get_si();
}

GroupRingElem GroupRingElem::pow(const Int& e) const {
    if (e < 0) {
        auto inv = inverse();
        if (!inv) throw std::domain_error("negative power of a non-unit");
        return inv->pow(-e);
    }
    GroupRingElem result = one(m_, char_);
    GroupRingElem base = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

bool GroupRingElem::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

namespace {

using detail::QPoly;

QPoly to_qpoly(const std::vector<Int>& c) {
    QPoly r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) r[i] = Rat(c[i]);
    detail::trim(r);
    return r;
}

/// x^m - 1.
QPoly power_minus_one(long m) {
    QPoly r(static_cast<std::size_t>(m) + 1, Rat(0));
    r[0] = -1;
    r[static_cast<std::size_t>(m)] = 1;
    return r;
}

/// Cyclotomic polynomial of p^k as a QPoly (k >= 1), together with k = 0
/// meaning x - 1.
QPoly cyclo_qpoly(long p, long k) {
    if (k == 0) return {Rat(-1), Rat(1)};
    long deg = euler_phi_prime_power(p, k);
    long step = ipow(p, k - 1);
    QPoly r(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (long j = 0; j < p; ++j) r[static_cast<std::size_t>(j * step)] = 1;
    return r;
}

/// Inverse over Q[x]/(x^m - 1) for m = p^n via the orthogonal idempotents of
/// the cyclotomic factors: invert each residue u mod Phi_{p^k} separately and
/// recombine.  Far cheaper than one extended Euclid against x^m - 1 once the
/// coefficients get large.
std::optional<QPoly> invert_prime_power(const std::vector<Int>& coeffs, long p, long n) {
    long m = ipow(p, n);
    QPoly u = to_qpoly(coeffs);
    if (u.empty()) return std::nullopt;

    // A_k = average over the subgroup generated by g^{p^k}: the projector
    // onto characters whose order divides p^k.  The component idempotent for
    // exact character order p^k is then A_k - A_{k-1}.
    auto subgroup_average = [&](long k) {
        QPoly e(static_cast<std::size_t>(m), Rat(0));
        long step = ipow(p, k);
        long count = m / step;
        Rat w(1, count);
        for (long j = 0; j < count; ++j) e[static_cast<std::size_t>(j * step)] = w;
        return e;
    };

    QPoly result;
    QPoly prev_avg;
    for (long k = 0; k <= n; ++k) {
        QPoly modulus = cyclo_qpoly(p, k);
        QPoly res = detail::qp_rem(u, modulus);
        if (res.empty()) return std::nullopt;  // zero divisor
        auto inv = detail::qp_inverse_mod(res, modulus);
        if (!inv) return std::nullopt;
        QPoly avg = subgroup_average(k);
        QPoly idem = (k == 0) ? avg : detail::qp_sub(avg, prev_avg);
        prev_avg = avg;
        QPoly term = detail::qp_mul(*inv, idem);
        // fold exponents mod m and accumulate
        if (result.size() < static_cast<std::size_t>(m)) result.resize(static_cast<std::size_t>(m), Rat(0));
        for (std::size_t i = 0; i < term.size(); ++i)
            result[i % static_cast<std::size_t>(m)] += term[i];
    }
    detail::trim(result);
    return result;
}

}  // namespace

std::optional<GroupRingElem> GroupRingElem::inverse() const {
    if (char_ != 0) {
        // solve the m x m circulant system over F_p
        long p = char_;
        std::size_t m = static_cast<std::size_t>(m_);
        std::vector<std::vector<long>> A(m, std::vector<long>(m + 1, 0));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                A[i][j] = static_cast<long>(c_[(i + m - j) % m].get_si());
            A[i][m] = (i == 0) ? 1 : 0;
        }
        std::size_t row = 0;
        std::vector<std::size_t> pivot_col;
        for (std::size_t col = 0; col < m && row < m; ++col) {
            std::size_t piv = row;
            while (piv < m && A[piv][col] == 0) ++piv;
            if (piv == m) continue;
            std::swap(A[piv], A[row]);
            long inv = mod_inverse(A[row][col], p);
            for (auto& x : A[row]) x = x * inv % p;
            for (std::size_t r = 0; r < m; ++r) {
                if (r == row || A[r][col] == 0) continue;
                long f = A[r][col];
                for (std::size_t c2 = col; c2 <= m; ++c2)
                    A[r][c2] = ((A[r][c2] - f * A[row][c2]) % p + p) % p;
            }
            pivot_col.push_back(col);
            ++row;
        }
        if (row < m) return std::nullopt;  // singular: zero divisor
        GroupRingElem inv(m_, char_);
        for (std::size_t r = 0; r < m; ++r) inv.c_[pivot_col[r]] = A[r][m];
        if (!((*this) * inv).is_one()) return std::nullopt;
        return inv;
    }

    std::optional<QPoly> v;
    bool prime_power_route = false;
    for (long p = 2; p <= m_; ++p) {
        if (is_prime(p) && power_of(m_, p) > 0) {
            v = invert_prime_power(c_, p, power_of(m_, p));
            prime_power_route = true;
            break;
        }
    }
    if (!prime_power_route) {
        QPoly u = to_qpoly(c_);
        if (u.empty()) return std::nullopt;
        v = detail::qp_inverse_mod(u, power_minus_one(m_));
    }
    if (!v) return std::nullopt;
    auto ints = detail::qp_integral(*v, static_cast<std::size_t>(m_));
    if (!ints) return std::nullopt;
    GroupRingElem inv = from_coeffs(m_, 0, std::move(*ints));
    if (!((*this) * inv).is_one()) return std::nullopt;
    return inv;
}

namespace {

/// Hermite normal form of the lattice (Delta G)^2 inside Z^m.  As a Z-module
/// the square of the augmentation ideal is spanned by g^c (g-1)^2 for
/// 0 <= c < m, since (g^i-1)(g^j-1) = sum_{v<j} g^v (g^i-1)(g-1) and
/// (g^i-1) expands the same way.
class AugSquaredLattice {
  public:
    explicit AugSquaredLattice(long m) : m_(m) {
        GroupRingElem g = GroupRingElem::monomial(m, 0, 1);
        GroupRingElem one = GroupRingElem::one(m, 0);
        GroupRingElem sq = (g - one) * (g - one);
        for (long c = 0; c < m; ++c) insert_(sq.shift(c).coeffs());
    }

    bool contains(std::vector<Int> v) const {
        for (const auto& row : rows_) {
            long pc = pivot_col_(row);
            if (v[static_cast<std::size_t>(pc)] == 0) continue;
            Int q = v[static_cast<std::size_t>(pc)] / row[static_cast<std::size_t>(pc)];
            Int rem = v[static_cast<std::size_t>(pc)] % row[static_cast<std::size_t>(pc)];
            if (rem != 0) return false;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * row[i];
        }
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

  private:
    static long pivot_col_(const std::vector<Int>& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) return static_cast<long>(i);
        return -1;
    }

    void insert_(std::vector<Int> v) {
        while (true) {
            long pc = pivot_col_(v);
            if (pc < 0) return;
            bool placed = false;
            for (auto& row : rows_) {
                long rp = pivot_col_(row);
                if (rp != pc) continue;
                // reduce v by row at the shared pivot
                Int a = row[static_cast<std::size_t>(pc)], b = v[static_cast<std::size_t>(pc)];
                Int g, s, t;
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
                           b.get_mpz_t());
                std::vector<Int> combined(row.size()), reduced(row.size());
                Int af = a / g, bf = b / g;
                for (std::size_t i = 0; i < row.size(); ++i) {
                    combined[i] = s * row[i] + t * v[i];
                    reduced[i] = af * v[i] - bf * row[i];
                }
                row = std::move(combined);
                v = std::move(reduced);
                placed = true;
                break;
            }
            if (!placed) {
                if (v[static_cast<std::size_t>(pc)] < 0)
                    for (auto& x : v) x = -x;
                rows_.push_back(std::move(v));
                std::sort(rows_.begin(), rows_.end(),
                          [](const auto& a, const auto& b) { return pivot_col_(a) < pivot_col_(b); });
                return;
            }
        }
    }

    long m_;
    std::vector<std::vector<Int>> rows_;
};

const AugSquaredLattice& aug_squared_lattice(long m) {
    static std::mutex mu;
    static std::map<long, AugSquaredLattice> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, AugSquaredLattice(m)).first;
    return it->second;
}

}  // namespace

bool GroupRingElem::is_u2() const {
    if (char_ != 0) throw std::invalid_argument("is_u2 is defined over Z coefficients");
    std::vector<Int> v = c_;
    v[0] -= 1;
    return aug_squared_lattice(m_).contains(std::move(v));
}

std::string GroupRingElem::to_string(std::string_view symbol) const {
    return render_terms(c_, symbol);
}

std::string GroupRingElem::digest() const {
    return fnv1a_digest("gr/" + std::to_string(m_) + "/" + std::to_string(char_) + "/" +
                        to_string());
}

// ---------------------------------------------------------------------------
// x-adic basis
// ---------------------------------------------------------------------------

XAdicElem::XAdicElem(long m, long p) : m_(m), p_(p), t_(static_cast<std::size_t>(m), 0) {
    if (m < 1 || !is_prime(p)) throw std::invalid_argument("bad x-adic context");
}

XAdicElem XAdicElem::one(long m, long p) {
    XAdicElem r(m, p);
    r.t_[0] = 1;
    return r;
}

XAdicElem XAdicElem::from_terms(long m, long p, std::vector<long> terms) {
    if (static_cast<long>(terms.size()) != m)
        throw std::invalid_argument("term count must equal the modulus");
    XAdicElem r(m, p);
    for (std::size_t i = 0; i < terms.size(); ++i) r.t_[i] = ((terms[i] % p) + p) % p;
    return r;
}

XAdicElem XAdicElem::operator*(const XAdicElem& o) const {
    if (m_ != o.m_ || p_ != o.p_) throw std::invalid_argument("x-adic context mismatch");
    XAdicElem r(m_, p_);
    for (long i = 0; i < m_; ++i) {
        if (t_[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < m_ - i; ++j) {
            if (o.t_[static_cast<std::size_t>(j)] == 0) continue;
            auto& slot = r.t_[static_cast<std::size_t>(i + j)];
            slot = (slot + t_[static_cast<std::size_t>(i)] * o.t_[static_cast<std::size_t>(j)]) % p_;
        }
    }
    return r;
}

XAdicElem XAdicElem::pow(const Int& e) const {
    if (e < 0) throw std::domain_error("negative x-adic power not supported");
    XAdicElem result = one(m_, p_);
    XAdicElem base = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::optional<std::pair<long, long>> XAdicElem::leading() const {
    for (long i = 1; i < m_; ++i)
        if (t_[static_cast<std::size_t>(i)] != 0) return std::make_pair(i, t_[static_cast<std::size_t>(i)]);
    return std::nullopt;
}

Int XAdicElem::unit_order() const {
    if (t_[0] != 1) throw std::domain_error("unit_order requires constant term 1");
    auto l = leading();
    if (!l) return 1;
    Int ord = 1;
    long d = l->first;
    while (d < m_) {
        d *= p_;
        ord *= p_;
    }
    return ord;
}

bool XAdicElem::is_one() const {
    if (t_[0] != 1) return false;
    return !leading().has_value();
}

std::string XAdicElem::to_string(std::string_view symbol) const {
    std::vector<Int> c(t_.size());
    for (std::size_t i = 0; i < t_.size(); ++i) c[i] = t_[i];
    return render_terms(c, symbol);
}

std::string XAdicElem::digest() const {
    return fnv1a_digest("x/" + std::to_string(m_) + "/" + std::to_string(p_) + "/" + to_string());
}

namespace {

/// Pascal's triangle modulo p, rows 0..m-1.
std::vector<std::vector<long>> binomials_mod(long m, long p) {
    std::vector<std::vector<long>> c(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (long j = 1; j < i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                 c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]) %
                p;
    }
    return c;
}

}  // namespace

XAdicElem to_x_basis(const GroupRingElem& a) {
    long p = a.characteristic();
    if (p == 0) throw std::invalid_argument("to_x_basis requires prime characteristic");
    if (power_of(a.order(), p) < 0)
        throw std::invalid_argument("to_x_basis requires the modulus to be a power of p");
    long m = a.order();
    auto binom = binomials_mod(m, p);
    XAdicElem r(m, p);
    std::vector<long> out(static_cast<std::size_t>(m), 0);
    // h^j = (1+x)^j: term x^i picks up C(j, i) a_j
    for (long j = 0; j < m; ++j) {
        long aj = static_cast<long>(a.coeff(j).get_si());
        if (aj == 0) continue;
        for (long i = 0; i <= j; ++i)
            out[static_cast<std::size_t>(i)] =
                (out[static_cast<std::size_t>(i)] + aj * binom[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) % p;
    }
    return XAdicElem::from_terms(m, p, std::move(out));
}

GroupRingElem from_x_basis(const XAdicElem& a) {
    long m = a.order(), p = a.prime();
    auto binom = binomials_mod(m, p);
    std::vector<Int> out(static_cast<std::size_t>(m), Int(0));
    // x^i = (h-1)^i: coefficient of h^j is C(i, j) (-1)^{i-j}
    for (long i = 0; i < m; ++i) {
        long bi = a.term(i);
        if (bi == 0) continue;
        for (long j = 0; j <= i; ++j) {
            long sign = ((i - j) % 2 == 0) ? 1 : p - 1;
            long v = bi * binom[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % p * sign % p;
            out[static_cast<std::size_t>(j)] = (out[static_cast<std::size_t>(j)] + v) % p;
        }
    }
    return GroupRingElem::from_coeffs(m, p, std::move(out));
}

}  // namespace zcpn
