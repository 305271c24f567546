#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "cqsym/costmodel.hpp"

namespace cqsym {

using Int = mpz_class;

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition or contract violation (non-primary divisor, wrong congruence
// class, out-of-range parameter).
class DomainError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
};

// A computation produced a value that its mathematical invariants rule out,
// for instance a power-residue character that is not a root of unity.
class IntegrityError : public Error {
public:
    using Error::Error;
};

class FitError : public DomainError {
public:
    using DomainError::DomainError;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Discrete binary logarithm: 1 for zero, floor(log2 |n|) + 1 otherwise.
std::uint64_t bitlen(const Int& n);

// Audited integer arithmetic. Every multiplication, division and addition
// performed by the ring and division code goes through these, so that an
// attached CostCounters sees the whole run. A null counter disables charging.
Int imul(const Int& x, const Int& y, CostCounters* cost);
Int iadd(const Int& x, const Int& y, CostCounters* cost);
Int isub(const Int& x, const Int& y, CostCounters* cost);

// Nearest integer to num/den (den > 0); exact halves round toward +infinity.
Int iround_div(const Int& num, const Int& den, CostCounters* cost);

// num/den when den divides num exactly (checked).
Int iexact_div(const Int& num, const Int& den, CostCounters* cost);

// floor(x / 2^k) and x * 2^k.
Int ishr(const Int& x, std::uint64_t k, CostCounters* cost);
Int ishl(const Int& x, std::uint64_t k, CostCounters* cost);

// Least non-negative residue of x modulo a small positive modulus.
unsigned long imod_small(const Int& x, unsigned long modulus, CostCounters* cost);

// Least non-negative residue, for any positive modulus.
Int mod_floor(const Int& x, const Int& modulus);

// x^e mod m for e >= 0, m > 0.
Int powmod(const Int& x, const Int& e, const Int& m);

// Exact integer square root when n is a perfect square, -1 otherwise.
Int exact_sqrt_or_neg(const Int& n);

}  // namespace cqsym
