#include "zcpn/context.hpp"

namespace zcpn {

PrimePowerCtx make_ctx(long p, long n, std::optional<long> t_override) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be at least 1");

    PrimePowerCtx ctx;
    ctx.p = p;
    ctx.n = n;
    ctx.m = ipow(p, n);

    if (p == 2 && n <= 2) {
        ctx.trivial = true;
        ctx.phi = euler_phi_prime_power(p, n);
        ctx.t = 1;
        ctx.kappa = 0;
        ctx.r = 1;
        ctx.k = 0;
        return ctx;
    }

    ctx.phi = euler_phi_prime_power(p, n);
    if (p == 2) {
        if (t_override && *t_override != 3)
            throw std::invalid_argument("for p = 2 the generator is fixed at t = 3");
        ctx.t = 3;
        if (multiplicative_order(3, ctx.m) != ctx.m / 4)
            throw std::logic_error("order of 3 mod 2^n is not 2^{n-2}");
    } else {
        if (t_override) {
            if (*t_override <= 1 || *t_override % p == 0 ||
                multiplicative_order(*t_override % ctx.m, ctx.m) != ctx.phi)
                throw std::invalid_argument("t override does not generate the units mod p^n");
            ctx.t = *t_override % ctx.m;
        } else {
            ctx.t = smallest_primitive_root(p, n);
        }
    }

    ctx.kappa = ctx.phi / 2 - 1;
    ctx.r = mod_inverse(ctx.t, ctx.m);
    ctx.k = (Int(ctx.t) * ctx.r - 1) / ctx.m;
    if (ctx.k * ctx.m != Int(ctx.t) * ctx.r - 1)
        throw std::logic_error("t*r - 1 not divisible by p^n");
    return ctx;
}

}  // namespace zcpn
