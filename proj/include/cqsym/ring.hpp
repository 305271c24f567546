#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "cqsym/int.hpp"

namespace cqsym {

// a + b*rho in Z[rho], rho = -1/2 + sqrt(-3)/2, rho^2 = -1 - rho.
struct Eisenstein {
    Int a;
    Int b;

    Eisenstein() = default;
    Eisenstein(Int a_, Int b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    Eisenstein(long a_, long b_ = 0) : a(a_), b(b_) {}
    Eisenstein(int a_, int b_ = 0) : a(a_), b(b_) {}

    bool operator==(const Eisenstein&) const = default;
};

// a + b*i in Z[i].
struct Gaussian {
    Int a;
    Int b;

    Gaussian() = default;
    Gaussian(Int a_, Int b_ = 0) : a(std::move(a_)), b(std::move(b_)) {}
    Gaussian(long a_, long b_ = 0) : a(a_), b(b_) {}
    Gaussian(int a_, int b_ = 0) : a(a_), b(b_) {}

    bool operator==(const Gaussian&) const = default;
};

// ---- Eisenstein arithmetic ------------------------------------------------

Eisenstein add(const Eisenstein& x, const Eisenstein& y, CostCounters* cost = nullptr);
Eisenstein sub(const Eisenstein& x, const Eisenstein& y, CostCounters* cost = nullptr);
Eisenstein mul(const Eisenstein& x, const Eisenstein& y, CostCounters* cost = nullptr);
Eisenstein neg(const Eisenstein& x);
Int norm(const Eisenstein& x, CostCounters* cost = nullptr);
Eisenstein conj(const Eisenstein& x, CostCounters* cost = nullptr);

// ---- Gaussian arithmetic --------------------------------------------------

Gaussian add(const Gaussian& x, const Gaussian& y, CostCounters* cost = nullptr);
Gaussian sub(const Gaussian& x, const Gaussian& y, CostCounters* cost = nullptr);
Gaussian mul(const Gaussian& x, const Gaussian& y, CostCounters* cost = nullptr);
Gaussian neg(const Gaussian& x);
Int norm(const Gaussian& x, CostCounters* cost = nullptr);
Gaussian conj(const Gaussian& x, CostCounters* cost = nullptr);

// Unaccounted operator forms, for generators and tests.
inline Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) { return add(x, y); }
inline Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) { return sub(x, y); }
inline Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) { return mul(x, y); }
inline Eisenstein operator-(const Eisenstein& x) { return neg(x); }
inline Gaussian operator+(const Gaussian& x, const Gaussian& y) { return add(x, y); }
inline Gaussian operator-(const Gaussian& x, const Gaussian& y) { return sub(x, y); }
inline Gaussian operator*(const Gaussian& x, const Gaussian& y) { return mul(x, y); }
inline Gaussian operator-(const Gaussian& x) { return neg(x); }

template <class R>
bool is_zero(const R& x) {
    return sgn(x.a) == 0 && sgn(x.b) == 0;
}

bool is_unit(const Eisenstein& x);
bool is_unit(const Gaussian& x);

// Bit length of the larger coordinate.
template <class R>
std::uint64_t coord_bitlen(const R& x) {
    return std::max(bitlen(x.a), bitlen(x.b));
}

// x^e for small non-negative e.
Eisenstein pow(const Eisenstein& x, unsigned e);
Gaussian pow(const Gaussian& x, unsigned e);

// Units. The Eisenstein units are indexed counterclockwise as powers of the
// primitive sixth root 1 + rho: 1, 1+rho, rho, -1, rho^2, -rho.
Eisenstein eis_unit(unsigned k);
// i^k.
Gaussian gauss_unit(unsigned k);
// rho^k.
Eisenstein rho_pow(unsigned k);

// divides(y, x): y | x. exact_quotient(x, y) = x / y, which must be exact.
bool divides(const Eisenstein& y, const Eisenstein& x);
bool divides(const Gaussian& y, const Gaussian& x);
Eisenstein exact_quotient(const Eisenstein& x, const Eisenstein& y);
Gaussian exact_quotient(const Gaussian& x, const Gaussian& y);

// ---- classification -------------------------------------------------------

enum class EisTag { zero, unit, primary_plus, primary_minus, ramified_divisible, other };

struct EisClass {
    EisTag tag = EisTag::zero;
    // True for all six units; the units +1 and -1 carry a primary tag.
    bool unit = false;
    // +1 or -1 for the primary tags (alpha = residue mod 3), else 0.
    int residue = 0;
};

// Primary means alpha = +1 or -1 mod 3, i.e. 3 | b and 3 does not divide a.
// The class of 2 (= -1 mod 3) is reported as primary_minus.
EisClass classify(const Eisenstein& x, CostCounters* cost = nullptr);
bool is_primary(const Eisenstein& x, CostCounters* cost = nullptr);
bool is_two_primary(const Eisenstein& x);
bool is_ramified_divisible(const Eisenstein& x, CostCounters* cost = nullptr);

enum class GaussTag { zero, unit, primary, even_divisible, other };

struct GaussClass {
    GaussTag tag = GaussTag::zero;
    // True for 1, i, -1, -i; the unit 1 carries the primary tag.
    bool unit = false;
};

// Primary means 2 | b and a + b = 1 mod 4. (1+i) | x iff a + b is even.
GaussClass classify(const Gaussian& x, CostCounters* cost = nullptr);
bool is_primary(const Gaussian& x, CostCounters* cost = nullptr);
bool is_even_divisible(const Gaussian& x, CostCounters* cost = nullptr);

// ---- ramified factors and unit normalization -----------------------------

template <class R>
struct RamifiedSplit {
    // Number of successful divisions by the ramified prime.
    std::uint64_t m = 0;
    R rest;
};

template <class R>
struct UnitSplit {
    // rest * u^n equals the input, u = rho (Eisenstein) or i (Gaussian).
    unsigned n = 0;
    R rest;
};

// g = (1 - rho)^m * rest with rest not divisible by 1 - rho. g must be nonzero.
// Each division uses (e + f rho) / (1 - rho) = (2e - f)/3 + ((e + f)/3) rho.
// Charges one ramified_removals per successful division.
RamifiedSplit<Eisenstein> remove_ramified(const Eisenstein& g, CostCounters* cost = nullptr);

// g = rho^n * rest with rest primary; g must be nonzero and prime to 1 - rho.
UnitSplit<Eisenstein> unit_normalize(const Eisenstein& g, CostCounters* cost = nullptr);

// g = (1 + i)^m * rest with rest odd; (e + f i)/(1 + i) = (e + f)/2 + ((f - e)/2) i.
RamifiedSplit<Gaussian> remove_even(const Gaussian& g, CostCounters* cost = nullptr);

// g = i^n * rest with rest primary; g must be odd.
UnitSplit<Gaussian> unit_normalize(const Gaussian& g, CostCounters* cost = nullptr);

// ---- text form ------------------------------------------------------------
//
// Grammar: <int> | <int>? ('+'|'-')? <uint>? <letter>, where the letter is 'w'
// (standing for rho) or 'i'. The canonical form prints a, then a signed b with
// the letter; zero parts are omitted, a unit coefficient on the letter is
// omitted, and zero prints as "0".

Eisenstein parse_eisenstein(std::string_view text);
Gaussian parse_gaussian(std::string_view text);
std::string format(const Eisenstein& x);
std::string format(const Gaussian& x);

std::ostream& operator<<(std::ostream& os, const Eisenstein& x);
std::ostream& operator<<(std::ostream& os, const Gaussian& x);

}  // namespace cqsym
