#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>

namespace cqsym {

// Bit-operation accounting under standard arithmetic: multiplying an m-bit
// integer by an n-bit integer costs m*n, an addition costs max(m, n), and
// comparisons are free.
//
// A CostCounters instance has a single owner for the duration of a run.
// Counters from independent runs are merged with operator+=.
struct CostCounters {
    std::uint64_t mul_cost = 0;
    std::uint64_t add_cost = 0;
    std::uint64_t div_steps = 0;
    std::uint64_t ramified_removals = 0;
    std::uint64_t remainder_volume = 0;

    CostCounters& operator+=(const CostCounters& other);
    bool operator==(const CostCounters&) const = default;
};

// Immutable copy of the counters, in the field order of CostCounters.
struct CostSnapshot {
    std::uint64_t mul_cost = 0;
    std::uint64_t add_cost = 0;
    std::uint64_t div_steps = 0;
    std::uint64_t ramified_removals = 0;
    std::uint64_t remainder_volume = 0;

    static std::string csv_header();
    std::string to_csv() const;
    std::string to_json() const;
    bool operator==(const CostSnapshot&) const = default;
};

// The model multiplication cost M(m, n) = m * n.
constexpr std::uint64_t model_mul_cost(std::uint64_t m, std::uint64_t n) { return m * n; }

// Both functions accept a null accumulator, in which case nothing is recorded.
// Lengths below 1 are clamped to 1 (lg 0 = 1).
void charge_mul(CostCounters* c, std::uint64_t m, std::uint64_t n);
void charge_add(CostCounters* c, std::uint64_t n);

CostSnapshot snapshot(const CostCounters& c);

struct FitPoint {
    double size;
    double cost;
};

// Least-squares slope of ln(cost) against ln(size).
// Throws FitError on fewer than four points, non-increasing sizes, or
// non-positive costs.
double fit_exponent(std::span<const FitPoint> points);

}  // namespace cqsym
