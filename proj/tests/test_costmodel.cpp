#include <doctest.h>

#include <cmath>
#include <vector>

#include "cqsym/adversary.hpp"
#include "cqsym/division.hpp"
#include "cqsym/symbols.hpp"

using namespace cqsym;

namespace {

std::vector<FitPoint> synthetic(double coeff, double power) {
    std::vector<FitPoint> pts;
    for (double n : {8.0, 16.0, 32.0, 64.0, 128.0}) pts.push_back({n, coeff * std::pow(n, power)});
    return pts;
}

// Division of a k-bit-norm alpha = q beta + r by beta; returns the model cost
// over lg N(alpha) lg N(q).
double division_ratio(const Eisenstein& q, const Eisenstein& beta, bool newton) {
    const Eisenstein alpha = q * beta + Eisenstein(1);
    CostCounters c;
    const auto o = newton ? divmod_newton(alpha, beta, &c) : divmod_round(alpha, beta, &c);
    REQUIRE(o.q == q);
    return static_cast<double>(c.mul_cost) /
           (static_cast<double>(bitlen(norm(alpha))) * static_cast<double>(bitlen(norm(q))));
}

Eisenstein wide(unsigned bits, long salt) {
    return Eisenstein((Int(1) << bits) + salt * 7919, (Int(1) << (bits - 1)) - salt);
}

}  // namespace

TEST_SUITE("costmodel") {

TEST_CASE("charging") {
    CostCounters c;
    charge_mul(&c, 8, 8);
    CHECK(c.mul_cost == 64);
    charge_mul(&c, 0, 5);
    CHECK(c.mul_cost == 69);
    charge_add(&c, 12);
    CHECK(c.add_cost == 12);
    charge_mul(nullptr, 8, 8);
    CostCounters d;
    d.div_steps = 3;
    c += d;
    CHECK(c.div_steps == 3);
    CHECK(snapshot(c).mul_cost == 69);
}

TEST_CASE("model regularity") {
    for (std::uint64_t n = 1; n < 200; ++n)
        for (std::uint64_t a = 1; a < 20; ++a) {
            REQUIRE(model_mul_cost(n, n) <= model_mul_cost(a * n, a * n));
            REQUIRE(model_mul_cost(a * n, a * n) <= a * a * model_mul_cost(n, n));
        }
}

TEST_CASE("snapshot serialization") {
    CostCounters c;
    c.mul_cost = 1;
    c.add_cost = 2;
    c.div_steps = 3;
    c.ramified_removals = 4;
    c.remainder_volume = 5;
    const CostSnapshot s = snapshot(c);
    CHECK(CostSnapshot::csv_header() == "mul_cost,add_cost,div_steps,ramified_removals,remainder_volume");
    CHECK(s.to_csv() == "1,2,3,4,5");
    CHECK(s.to_json() ==
          R"({"mul_cost":1,"add_cost":2,"div_steps":3,"ramified_removals":4,"remainder_volume":5})");
}

TEST_CASE("exponent fits") {
    CHECK(std::abs(fit_exponent(synthetic(1, 3)) - 3.0) < 1e-6);
    CHECK(std::abs(fit_exponent(synthetic(7, 2)) - 2.0) < 1e-6);
    const auto three = synthetic(1, 2);
    CHECK_THROWS_AS(fit_exponent(std::span(three).first(3)), FitError);
    std::vector<FitPoint> flat = synthetic(1, 2);
    flat[2].size = flat[1].size;
    CHECK_THROWS_AS(fit_exponent(flat), FitError);
    std::vector<FitPoint> zero = synthetic(1, 2);
    zero[0].cost = 0;
    CHECK_THROWS_AS(fit_exponent(zero), FitError);
}

TEST_CASE("counters are monotone along a run") {
    const CubicRun r = cubic_jacobi(xi_cubic(60), xi_cubic(59));
    CHECK(r.trace.counters.div_steps == r.trace.steps.size());
    CHECK(r.trace.counters.mul_cost > 0);
    CostCounters c;
    std::uint64_t last = 0;
    Eisenstein a = xi_cubic(40), b = xi_cubic(39);
    while (!is_unit(b)) {
        const auto o = divmod_round(a, b, &c);
        REQUIRE(c.mul_cost >= last);
        last = c.mul_cost;
        a = b;
        b = o.r;
    }
}

TEST_CASE("division cost tracks dividend length times quotient length") {
    // Quotient and divisor of proportional size: the model cost is
    // Theta(lg N(alpha) lg N(q)) for both backends.
    std::vector<double> exact, newton;
    for (unsigned bits : {64u, 128u, 256u, 512u, 1024u, 2048u}) {
        exact.push_back(division_ratio(wide(bits, 3), wide(bits, 5), false));
        newton.push_back(division_ratio(wide(bits, 3), wide(bits, 5), true));
    }
    const auto [emin, emax] = std::minmax_element(exact.begin(), exact.end());
    const auto [nmin, nmax] = std::minmax_element(newton.begin(), newton.end());
    CHECK(*emin > 0.25);
    CHECK(*emax < 8);
    CHECK(*emax / *emin < 2);
    CHECK(*nmin > 0.25);
    CHECK(*nmax < 40);
    CHECK(*nmax / *nmin < 3);
    // Short quotient by a long divisor: bounded by lg N(alpha) lg N(q) for Newton.
    for (unsigned bits : {256u, 1024u, 4096u}) {
        const double r = division_ratio(wide(16, 3), wide(bits, 5), true);
        MESSAGE("short quotient, divisor bits ", bits, ": ratio ", r);
        CHECK(r < 200);
    }
}

}
