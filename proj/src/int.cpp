#include "cqsym/int.hpp"

#include <algorithm>

namespace cqsym {

std::uint64_t bitlen(const Int& n) {
    if (sgn(n) == 0) return 1;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Int imul(const Int& x, const Int& y, CostCounters* cost) {
    charge_mul(cost, bitlen(x), bitlen(y));
    return x * y;
}

Int iadd(const Int& x, const Int& y, CostCounters* cost) {
    charge_add(cost, std::max(bitlen(x), bitlen(y)));
    return x + y;
}

Int isub(const Int& x, const Int& y, CostCounters* cost) {
    charge_add(cost, std::max(bitlen(x), bitlen(y)));
    return x - y;
}

Int iround_div(const Int& num, const Int& den, CostCounters* cost) {
    if (sgn(den) == 0) throw DivisionByZero();
    if (sgn(den) < 0) throw DomainError("iround_div: divisor must be positive");
    // Long division of an a-bit number by a b-bit number: (a - b + 1) rows of b bits.
    const std::uint64_t a = bitlen(num) + 1;
    const std::uint64_t b = bitlen(den) + 1;
    charge_mul(cost, b, a > b ? a - b + 1 : 1);
    Int twice = num * 2 + den;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Int(den * 2).get_mpz_t());
    return q;
}

Int iexact_div(const Int& num, const Int& den, CostCounters* cost) {
    if (sgn(den) == 0) throw DivisionByZero();
    const std::uint64_t a = bitlen(num);
    const std::uint64_t b = bitlen(den);
    charge_mul(cost, b, a > b ? a - b + 1 : 1);
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw IntegrityError("iexact_div: divisor does not divide dividend");
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Int ishr(const Int& x, std::uint64_t k, CostCounters* cost) {
    charge_add(cost, bitlen(x));
    Int r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

Int ishl(const Int& x, std::uint64_t k, CostCounters* cost) {
    charge_add(cost, bitlen(x) + k);
    Int r;
    mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

unsigned long imod_small(const Int& x, unsigned long modulus, CostCounters* cost) {
    charge_add(cost, bitlen(x));
    return mpz_fdiv_ui(x.get_mpz_t(), modulus);
}

Int mod_floor(const Int& x, const Int& modulus) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Int powmod(const Int& x, const Int& e, const Int& m) {
    Int r;
    Int base = mod_floor(x, m);
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int exact_sqrt_or_neg(const Int& n) {
    if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return Int(-1);
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace cqsym
