#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cqsym/symbols.hpp"

namespace cqsym {

// p = s^2 + 3t^2 = x^2 - xy + y^2 with x = s + t, y = 2t; pi = x + y w made
// primary, a prime of norm p.
struct NormEquationSolution {
    Int p, s, t, x, y;
    Eisenstein pi;
};

// p = x^2 + y^2 with 0 < x < y.
struct TwoSquares {
    Int p, x, y;
};

// Power-residue characters by Euler's criterion: the root of unity congruent
// to alpha^((N pi - 1)/e) mod pi, or zero when pi | alpha. pi must be a prime
// of norm > 1; reduction uses remainder_jacobi. A power that is not congruent
// to a root of unity exposes a composite pi and raises IntegrityError.
CubicSymbol euler_cubic_char(const Eisenstein& alpha, const Eisenstein& pi);
QuarticSymbol euler_quartic_char(const Gaussian& alpha, const Gaussian& pi);

// Largest norm the factoring oracle accepts.
inline constexpr std::uint64_t kOracleNormBound = 100000000;

// Jacobi symbol as a product of prime characters, factoring beta by trial
// division of N(beta) and splitting each rational prime in the ring. Meant as
// a reference for testing; beta must be primary with N(beta) <= 10^8.
CubicSymbol jacobi_oracle(const Eisenstein& alpha, const Eisenstein& beta);
QuarticSymbol jacobi_oracle(const Gaussian& alpha, const Gaussian& beta);

// Probable-prime test, deterministic in practice at the sizes used here.
bool is_prime(const Int& n);

// Square root of a modulo an odd prime p by Tonelli-Shanks; the smaller of the
// two roots in (0, p). The nonresidue is found by trying 2, 3, 4, ... in turn.
Int sqrt_mod_p(const Int& a, const Int& p);

// p = s^2 + 3t^2 with s, t > 0, for a prime p = 1 mod 3, by descent on
// (p, sqrt(-3) mod p) to the first remainder below sqrt(p).
std::pair<Int, Int> solve_s2_3t2(const Int& p);

NormEquationSolution norm_equation_eis(const Int& p);

// z = (x + y)/(x - y) mod p squares to -3; z = y/x mod p squares to -1.
Int sqrt_neg3_from_partition(const Int& x, const Int& y, const Int& p);
Int sqrt_neg1_from_partition(const Int& x, const Int& y, const Int& p);

TwoSquares solve_x2_y2(const Int& p);

// A primary prime of norm p above p = 1 mod 4.
Gaussian gaussian_prime_above(const Int& p);

enum class Power { cubic = 3, quartic = 4 };
enum class Strategy { euler, reciprocity, automatic };

// Whether a is a cubic (quartic) residue mod the prime p. Cubic accepts every
// prime; for p = 3 and p = 2 mod 3 every a prime to p is a cube. Quartic
// requires p = 1 mod 4. a must be prime to p. automatic picks Euler for a
// single query.
bool residue_test(const Int& a, const Int& p, Power power, Strategy strategy = Strategy::automatic);

// One answer per a. The prime above p is found once; automatic uses
// reciprocity when there are at least bitlen(p) queries.
std::vector<bool> residue_test_batch(const Int& p, const std::vector<Int>& as, Power power,
                                     Strategy strategy = Strategy::automatic);

enum class PartitionKind { s2_3t2, x2_y2 };

// (p, s, t) or (p, x, y).
struct PartitionRow {
    std::uint64_t p = 0;
    Int u, v;
};

// Rows for every prime p <= n with p = 1 mod 3 (s2_3t2) or p = 1 mod 4
// (x2_y2), in increasing p. Requires n >= 7.
void partition_table(std::uint64_t n, PartitionKind kind,
                     const std::function<void(const PartitionRow&)>& emit);
std::vector<PartitionRow> partition_table(std::uint64_t n, PartitionKind kind);

}  // namespace cqsym
