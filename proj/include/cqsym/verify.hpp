#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cqsym/ring.hpp"

namespace cqsym {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Uniform over nonzero elements with coordinates in [-bound, bound].
Eisenstein random_eisenstein(std::mt19937_64& rng, const Int& bound);
Gaussian random_gaussian(std::mt19937_64& rng, const Int& bound);
// Uniform over primary elements in the same box (sign of the residue free).
Eisenstein random_primary_eisenstein(std::mt19937_64& rng, const Int& bound);
Gaussian random_primary_gaussian(std::mt19937_64& rng, const Int& bound);
Int random_int(std::mt19937_64& rng, const Int& lo, const Int& hi);

// All primary primes with 3 < N <= max_norm (one generator per prime ideal),
// ordered by norm.
std::vector<Eisenstein> primary_primes_eis(std::uint64_t max_norm);
std::vector<Gaussian> primary_primes_gauss(std::uint64_t max_norm);

// Complete system of nonzero residues mod a prime: 1..p-1 when N pi = p,
// a + b basis with 0 <= a, b < p otherwise.
std::vector<Eisenstein> nonzero_residues(const Eisenstein& pi);
std::vector<Gaussian> nonzero_residues(const Gaussian& pi);

struct VerifyReport {
    std::string suite;
    std::uint64_t cases = 0;
    bool ok = true;
    std::string counterexample;
};

// Suites: cubic, quartic, even, residue, division. Randomized suites draw
// `samples` cases from the seed.
VerifyReport verify_suite(const std::string& suite, std::uint64_t max_norm,
                          std::uint64_t seed = kDefaultSeed, std::uint64_t samples = 10000);

}  // namespace cqsym
