#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqsym/division.hpp"

namespace cqsym {

// Zero, or the root of unity w^k (Order 3) or i^k (Order 4).
template <int Order>
struct PowerSymbol {
    bool zero = false;
    int exponent = 0;

    static PowerSymbol vanishing() { return PowerSymbol{true, 0}; }
    static PowerSymbol power(long long k) {
        int e = static_cast<int>(k % Order);
        if (e < 0) e += Order;
        return PowerSymbol{false, e};
    }
    bool operator==(const PowerSymbol&) const = default;
};

using CubicSymbol = PowerSymbol<3>;
using QuarticSymbol = PowerSymbol<4>;

template <int Order>
PowerSymbol<Order> operator*(const PowerSymbol<Order>& x, const PowerSymbol<Order>& y) {
    if (x.zero || y.zero) return PowerSymbol<Order>::vanishing();
    return PowerSymbol<Order>::power(x.exponent + y.exponent);
}

// "0", "w^k" or "i^k".
std::string format(const CubicSymbol& s);
std::string format(const QuarticSymbol& s);

// One division of the chain alpha = q beta + (ramified)^m unit^n gamma''.
// The terminal record stands for the last division alpha_t = q_t beta_t,
// whether the remainder vanished or beta_t is a unit.
template <class R>
struct StepRecord {
    R q;
    std::uint64_t m = 0;
    unsigned n = 0;
    std::uint64_t bitlen_alpha = 0;
    std::uint64_t bitlen_beta = 0;
    std::uint64_t bitlen_q = 0;
    // Divisibility tests by the ramified prime, the failing one included.
    std::uint64_t ramified_tests = 0;
    bool terminal = false;
};

template <class R>
struct RunTrace {
    std::vector<StepRecord<R>> steps;
    // beta_t: a gcd of the inputs (a unit when the symbol is nonzero).
    R gcd;
    CostCounters counters;
};

// symbol is empty exactly when the step cap was hit.
template <class S, class R>
struct SymbolRun {
    std::optional<S> symbol;
    RunTrace<R> trace;
    bool cap_exceeded = false;
};

using CubicRun = SymbolRun<CubicSymbol, Eisenstein>;
using QuarticRun = SymbolRun<QuarticSymbol, Gaussian>;

enum class Backend { exact, newton };

inline constexpr std::uint64_t kDefaultStepCap = std::uint64_t{1} << 20;

enum class ExponentForm { direct, williams_holte };

// Exponent mod 3 of the factor w^(-m(c^2-1)/3 + n(c^2-cd-1)/3) picked up by
// one step, evaluated from c, d mod 9. The williams_holte form evaluates
// (2m+n)(c^2-1)/3 - ncd/3 instead; both agree.
int cubic_step_exponent(std::uint64_t m, long long n, const Int& c, const Int& d,
                        ExponentForm form = ExponentForm::direct);

// Exponent mod 4 of i^(m(c-d-d^2-1)/4 - n(c-1)/2) (-1)^((e''-1)(c-1)/4),
// evaluated from c, d, e'' mod 16.
int quartic_step_exponent(std::uint64_t m, long long n, const Int& c, const Int& d,
                          const Int& e2);

// Cubic Jacobi symbol (alpha / beta) for primary beta, by the Williams-Holte
// algorithm. A unit alpha = +-w^k returns w^(k(c^2-cd-1)/3) without dividing.
CubicRun cubic_jacobi(const Eisenstein& alpha, const Eisenstein& beta,
                      Backend backend = Backend::exact);

// Quartic Jacobi symbol (alpha / beta) for primary beta.
QuarticRun quartic_jacobi(const Gaussian& alpha, const Gaussian& beta,
                          Backend backend = Backend::exact);

// Even-quotient variants: every quotient is divisible by the ramified prime,
// so remainders are never divisible by it and m = 0 throughout. alpha must be
// prime to the ramified prime. The run stops with cap_exceeded set once
// step_cap divisions have been made without finishing.
CubicRun cubic_jacobi_even(const Eisenstein& alpha, const Eisenstein& beta,
                           std::uint64_t step_cap = kDefaultStepCap);
QuarticRun quartic_jacobi_even(const Gaussian& alpha, const Gaussian& beta,
                               std::uint64_t step_cap = kDefaultStepCap);

// Accept any beta prime to the ramified prime and compute the symbol for the
// ideal (beta), i.e. for its primary associate.
CubicRun cubic_jacobi_ideal(const Eisenstein& alpha, const Eisenstein& beta,
                            Backend backend = Backend::exact);
QuarticRun quartic_jacobi_ideal(const Gaussian& alpha, const Gaussian& beta,
                                Backend backend = Backend::exact);

}  // namespace cqsym
