#pragma once

#include <cstdint>

#include "cqsym/ring.hpp"

namespace cqsym {

// Extra bits carried by every Newton-based division beyond the quotient
// length difference. The remainder bound then degrades from 3/4 to at most
// 3/4 + 3 * 2^-8 (Eisenstein) and from 1/2 to 1/2 + 3 * 2^-8 (Gaussian).
inline constexpr std::uint64_t kGuardBits = 8;

// alpha = q * beta + r, with shrink = N(r) / N(beta) recorded exactly.
template <class R>
struct DivisionOutcome {
    R q;
    R r;
    mpq_class shrink;
};

// (u + v * basis) / 2^exp, basis = rho or i depending on the ring.
struct DyadicComplex {
    Int u;
    Int v;
    std::uint64_t exp = 0;

    bool operator==(const DyadicComplex&) const = default;
};

// Rounded division: q is alpha * conj(beta) / N(beta) with each coordinate
// rounded to the nearest integer (halves toward +infinity), r = alpha - q beta.
// Guarantees 4 N(r) <= 3 N(beta) in Z[rho] and 2 N(r) <= N(beta) in Z[i].
DivisionOutcome<Eisenstein> divmod_round(const Eisenstein& alpha, const Eisenstein& beta,
                                         CostCounters* cost = nullptr);
DivisionOutcome<Gaussian> divmod_round(const Gaussian& alpha, const Gaussian& beta,
                                       CostCounters* cost = nullptr);

// Jacobi's remainder formula: [alpha conj(beta) mod N(beta)] * beta / N(beta),
// with absolutely least residues in the bracket.
Eisenstein remainder_jacobi(const Eisenstein& alpha, const Eisenstein& beta,
                            CostCounters* cost = nullptr);
Gaussian remainder_jacobi(const Gaussian& alpha, const Gaussian& beta, CostCounters* cost = nullptr);

// Starting point conj(beta) / 2^e for Newton inversion, e = 2 max(r, s) + 2
// where r, s are the bit lengths of the coordinates of beta.
DyadicComplex newton_start(const Eisenstein& beta);
DyadicComplex newton_start(const Gaussian& beta);

// Approximate inverse xi of beta with |1 - beta xi| < 2^-(digits + kGuardBits),
// by Newton's iteration xi' = xi (2 - beta xi) with precision doubling and
// truncated operands. The bound is confirmed by a final residual evaluated
// against the untruncated beta.
DyadicComplex newton_inverse(const Eisenstein& beta, std::uint64_t digits,
                             CostCounters* cost = nullptr);
DyadicComplex newton_inverse(const Gaussian& beta, std::uint64_t digits,
                             CostCounters* cost = nullptr);

// Division through the approximate inverse, carrying max(k - l, 0) + kGuardBits
// digits where k and l are the coordinate bit lengths of alpha and beta.
// The quotient can differ from divmod_round's only near rounding boundaries;
// the identity is exact and the remainder obeys the slackened bound.
DivisionOutcome<Eisenstein> divmod_newton(const Eisenstein& alpha, const Eisenstein& beta,
                                          CostCounters* cost = nullptr);
DivisionOutcome<Gaussian> divmod_newton(const Gaussian& alpha, const Gaussian& beta,
                                        CostCounters* cost = nullptr);

// Division with a quotient divisible by the ramified prime (1 - rho, resp.
// 1 + i) and N(r) < N(beta). Requires N(beta) > 1.
//
// The rounded quotient is kept when already divisible, or when the division
// is exact (then no divisible quotient leaves N(r) < N(beta)). Otherwise each unit
// adjustment q + u that is divisible is tried; the smallest N(r) wins, and
// ties go to the unit that comes first counterclockwise from 1
// (1, 1+rho, rho, -1, rho^2, -rho, resp. 1, i, -1, -i).
DivisionOutcome<Eisenstein> divmod_even(const Eisenstein& alpha, const Eisenstein& beta,
                                        CostCounters* cost = nullptr);
DivisionOutcome<Gaussian> divmod_even(const Gaussian& alpha, const Gaussian& beta,
                                      CostCounters* cost = nullptr);

}  // namespace cqsym
