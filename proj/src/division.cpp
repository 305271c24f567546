#include "cqsym/division.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <type_traits>

namespace cqsym {

namespace {

Int pow2(std::uint64_t k) {
    Int r;
    mpz_setbit(r.get_mpz_t(), k);
    return r;
}

// x * 2^k for signed k; negative k floors.
Int shift(const Int& x, std::int64_t k, CostCounters* cost) {
    return k >= 0 ? ishl(x, static_cast<std::uint64_t>(k), cost)
                  : ishr(x, static_cast<std::uint64_t>(-k), cost);
}

bool ramified_divides(const Eisenstein& q) { return is_ramified_divisible(q); }
bool ramified_divides(const Gaussian& q) { return is_even_divisible(q); }

// Tie-break order of the unit adjustments: counterclockwise from 1, i.e.
// 1, 1+w, w, -1, w^2, -w and 1, i, -1, -i. The even-quotient blowup family
// settles into the quotient cycle -2-w, -1-2w, 2+w, -2-w only under this order.
template <class R>
R unit_at(unsigned k);
template <>
Eisenstein unit_at<Eisenstein>(unsigned k) { return eis_unit(k); }
template <>
Gaussian unit_at<Gaussian>(unsigned k) { return gauss_unit(k); }

template <class R>
constexpr unsigned unit_count() {
    if constexpr (std::is_same_v<R, Eisenstein>) return 6;
    else return 4;
}

template <class R>
mpq_class ratio(const R& r, const Int& nb) {
    mpq_class q(norm(r), nb);
    q.canonicalize();
    return q;
}

template <class R>
DivisionOutcome<R> round_impl(const R& alpha, const R& beta, CostCounters* cost) {
    if (is_zero(beta)) throw DivisionByZero();
    const Int nb = norm(beta, cost);
    const R num = mul(alpha, conj(beta, cost), cost);
    R q(iround_div(num.a, nb, cost), iround_div(num.b, nb, cost));
    R r = sub(alpha, mul(q, beta, cost), cost);
    mpq_class shrink = ratio(r, nb);
    return {std::move(q), std::move(r), std::move(shrink)};
}

template <class R>
R jacobi_impl(const R& alpha, const R& beta, CostCounters* cost) {
    if (is_zero(beta)) throw DivisionByZero();
    const Int nb = norm(beta, cost);
    const R num = mul(alpha, conj(beta, cost), cost);
    const Int half = nb / 2;
    // Absolutely least residues; a residue of exactly -N/2 is kept, matching
    // the upward rounding of halves in divmod_round.
    auto least = [&](const Int& x) {
        const std::uint64_t a = bitlen(x), b = bitlen(nb);
        charge_mul(cost, b, a > b ? a - b + 1 : 1);
        return Int(mod_floor(x + half, nb) - half);
    };
    const R red(least(num.a), least(num.b));
    const R g = mul(red, beta, cost);
    return R(iexact_div(g.a, nb, cost), iexact_div(g.b, nb, cost));
}

template <class R>
DyadicComplex start_impl(const R& beta) {
    if (is_zero(beta)) throw DivisionByZero();
    const std::uint64_t h = coord_bitlen(beta);
    const R c = conj(beta);
    return DyadicComplex{c.a, c.b, 2 * h + 2};
}

// Lower bound on -log2 |eps| for eps = x / 2^f. For either ring,
// |u + v basis| < 2 max(|u|, |v|).
std::uint64_t accuracy_bits(std::uint64_t f, std::uint64_t len) {
    return f > len + 1 ? f - len - 1 : 0;
}

template <class R>
R one_minus(const R& prod, std::uint64_t f, CostCounters* cost) {
    return R(isub(pow2(f), prod.a, cost), -prod.b);
}

// Approximate inverse with |1 - beta xi| < 2^-target.
template <class R>
DyadicComplex inverse_impl(const R& beta, std::uint64_t target, CostCounters* cost) {
    if (is_zero(beta)) throw DivisionByZero();
    const std::uint64_t h = coord_bitlen(beta);
    const std::uint64_t cap = target + 6;
    const DyadicComplex s = start_impl(beta);

    // xi = x / 2^(h + p), carrying p bits below the leading bit of 1/beta.
    std::uint64_t p = 4;
    const auto to_scale = [&](std::uint64_t from, std::uint64_t to) {
        return static_cast<std::int64_t>(to) - static_cast<std::int64_t>(from);
    };
    R x(shift(s.u, to_scale(s.exp, h + p), cost), shift(s.v, to_scale(s.exp, h + p), cost));

    R eps;
    std::uint64_t f = 0;
    bool have_eps = false;
    for (int iter = 0; iter < 256; ++iter) {
        const std::uint64_t e = h + p;
        if (!have_eps) {
            const std::uint64_t drop = h > p + 4 ? h - p - 4 : 0;
            const R bt(ishr(beta.a, drop, cost), ishr(beta.b, drop, cost));
            f = e - drop;
            eps = one_minus(mul(bt, x, cost), f, cost);
        }
        have_eps = false;
        const std::uint64_t acc = accuracy_bits(f, coord_bitlen(eps));
        const std::uint64_t p_next = std::min(cap, std::max<std::uint64_t>(4, 2 * acc + 4));
        const std::uint64_t e_next = h + p_next;

        // xi' = xi + xi eps, with eps cut to p_next + 4 fractional bits.
        const std::uint64_t fd = f > p_next + 4 ? f - p_next - 4 : 0;
        const std::uint64_t ft = f - fd;
        const R et(ishr(eps.a, fd, cost), ishr(eps.b, fd, cost));
        const R corr = mul(x, et, cost);
        x = add(R(shift(x.a, to_scale(e, e_next), cost), shift(x.b, to_scale(e, e_next), cost)),
                R(shift(corr.a, to_scale(e + ft, e_next), cost),
                  shift(corr.b, to_scale(e + ft, e_next), cost)),
                cost);
        p = p_next;

        if (2 * acc >= target + 3) {
            f = h + p;
            eps = one_minus(mul(beta, x, cost), f, cost);
            // max coordinate below 2^(f - target - 1) gives
            // N(eps) <= 3 max^2 / 4^f < 4^-target.
            if (coord_bitlen(eps) + target + 1 <= f) return DyadicComplex{x.a, x.b, f};
            have_eps = true;
        }
    }
    throw IntegrityError("newton_inverse: iteration did not converge");
}

template <class R>
DivisionOutcome<R> newton_impl(const R& alpha, const R& beta, CostCounters* cost) {
    if (is_zero(beta)) throw DivisionByZero();
    const std::uint64_t k = coord_bitlen(alpha), l = coord_bitlen(beta);
    // |alpha / beta| < 2^(k - l + 3), so this residual leaves each quotient
    // coordinate within 2^-(g+1) of the true value.
    const std::uint64_t target = (k > l ? k - l : 0) + kGuardBits + 4;
    const DyadicComplex xi = inverse_impl(beta, target, cost);
    const R z = mul(alpha, R(xi.u, xi.v), cost);
    const Int half = pow2(xi.exp - 1);
    R q(ishr(iadd(z.a, half, cost), xi.exp, cost), ishr(iadd(z.b, half, cost), xi.exp, cost));
    R r = sub(alpha, mul(q, beta, cost), cost);
    mpq_class shrink = ratio(r, norm(beta));
    return {std::move(q), std::move(r), std::move(shrink)};
}

template <class R>
DivisionOutcome<R> even_impl(const R& alpha, const R& beta, CostCounters* cost) {
    if (is_zero(beta) || is_unit(beta))
        throw DomainError("divmod_even: divisor must have norm greater than 1");
    DivisionOutcome<R> o = round_impl(alpha, beta, cost);
    // An exact division keeps its quotient: every other choice leaves N(r) >= N(beta).
    if (ramified_divides(o.q) || is_zero(o.r)) return o;

    const Int nb = norm(beta);
    bool found = false;
    R best_q, best_r;
    Int best_n;
    for (unsigned k = 0; k < unit_count<R>(); ++k) {
        R q = add(o.q, unit_at<R>(k), cost);
        if (!ramified_divides(q)) continue;
        R r = sub(alpha, mul(q, beta, cost), cost);
        Int nr = norm(r, cost);
        if (nr < nb && (!found || nr < best_n)) {
            found = true;
            best_q = std::move(q);
            best_r = std::move(r);
            best_n = std::move(nr);
        }
    }
    if (!found)
        throw IntegrityError("divmod_even: no admissible quotient for " + format(alpha) + " / " +
                             format(beta));
    mpq_class shrink(best_n, nb);
    shrink.canonicalize();
    return {std::move(best_q), std::move(best_r), std::move(shrink)};
}

}  // namespace

DivisionOutcome<Eisenstein> divmod_round(const Eisenstein& alpha, const Eisenstein& beta,
                                         CostCounters* cost) {
    return round_impl(alpha, beta, cost);
}
DivisionOutcome<Gaussian> divmod_round(const Gaussian& alpha, const Gaussian& beta,
                                       CostCounters* cost) {
    return round_impl(alpha, beta, cost);
}

Eisenstein remainder_jacobi(const Eisenstein& alpha, const Eisenstein& beta, CostCounters* cost) {
    return jacobi_impl(alpha, beta, cost);
}
Gaussian remainder_jacobi(const Gaussian& alpha, const Gaussian& beta, CostCounters* cost) {
    return jacobi_impl(alpha, beta, cost);
}

DyadicComplex newton_start(const Eisenstein& beta) { return start_impl(beta); }
DyadicComplex newton_start(const Gaussian& beta) { return start_impl(beta); }

DyadicComplex newton_inverse(const Eisenstein& beta, std::uint64_t digits, CostCounters* cost) {
    if (digits == 0) throw DomainError("newton_inverse: digits must be positive");
    return inverse_impl(beta, digits + kGuardBits, cost);
}
DyadicComplex newton_inverse(const Gaussian& beta, std::uint64_t digits, CostCounters* cost) {
    if (digits == 0) throw DomainError("newton_inverse: digits must be positive");
    return inverse_impl(beta, digits + kGuardBits, cost);
}

DivisionOutcome<Eisenstein> divmod_newton(const Eisenstein& alpha, const Eisenstein& beta,
                                          CostCounters* cost) {
    return newton_impl(alpha, beta, cost);
}
DivisionOutcome<Gaussian> divmod_newton(const Gaussian& alpha, const Gaussian& beta,
                                        CostCounters* cost) {
    return newton_impl(alpha, beta, cost);
}

DivisionOutcome<Eisenstein> divmod_even(const Eisenstein& alpha, const Eisenstein& beta,
                                        CostCounters* cost) {
    return even_impl(alpha, beta, cost);
}
DivisionOutcome<Gaussian> divmod_even(const Gaussian& alpha, const Gaussian& beta,
                                      CostCounters* cost) {
    return even_impl(alpha, beta, cost);
}

}  // namespace cqsym
