#include <doctest.h>

#include <cmath>

#include "cqsym/adversary.hpp"
#include "cqsym/division.hpp"

using namespace cqsym;

namespace {

double to_double(const mpq_class& q) { return q.get_d(); }

// max(|a|, |b|)^2 * 3 >= N.
template <class R>
bool above_floor(const R& x) {
    const Int m = abs(x.a) > abs(x.b) ? Int(abs(x.a)) : Int(abs(x.b));
    return 3 * m * m >= norm(x);
}

}  // namespace

TEST_SUITE("adversary") {

TEST_CASE("cubic table") {
    // n, xi_n, N(xi_n)
    const struct {
        unsigned n;
        long a, b;
        long nrm;
    } table[] = {
        {0, -1, 0, 1},
        {1, 2, 0, 4},
        {2, -1, 6, 43},
        {3, -16, -21, 361},
        {4, 62, 21, 2983},
        {5, -79, 102, 24703},
        {6, -244, -522, 204652},
        {7, 1487, 936, 1695433},
        {8, -3052, 1131, 14045677},
        {9, -1906, -11613, 116360227},
        {10, 31787, 30252, 963976549},
    };
    for (const auto& row : table) {
        const Eisenstein x = xi_cubic(row.n);
        CHECK(x == Eisenstein(row.a, row.b));
        CHECK(norm(x) == row.nrm);
    }
    const auto terms = xi_cubic_terms(10);
    REQUIRE(terms.size() == 11);
    CHECK(terms[10] == xi_cubic(10));
    CHECK(cubic_recurrence().coefficient == Eisenstein(0, 3));
}

TEST_CASE("quartic terms") {
    CHECK(xi_quartic(0) == Gaussian(1));
    CHECK(xi_quartic(1) == Gaussian(5));
    CHECK(xi_quartic(2) == Gaussian(11, 10));
    CHECK(xi_quartic(3) == Gaussian(7, 42));
    CHECK(quartic_recurrence().coefficient == Gaussian(2, 2));
}

TEST_CASE("stress families") {
    CHECK(step4_stress(1) == std::make_pair(Eisenstein(5, -1), Eisenstein(4)));
    CHECK(step4_stress(2) == std::make_pair(Eisenstein(10, -3), Eisenstein(10)));
    CHECK(even_cubic_bad(1) == std::make_pair(Eisenstein(0, 5), Eisenstein(1, 6)));
    CHECK(even_cubic_bad(2) == std::make_pair(Eisenstein(0, 8), Eisenstein(1, 9)));
    CHECK(even_quartic_bad(5) == std::make_pair(Gaussian(21), Gaussian(17)));
    CHECK(even_quartic_bad(2) == std::make_pair(Gaussian(9), Gaussian(5)));
    for (unsigned m = 1; m <= 80; ++m) {
        const auto [a, b] = step4_stress(m);
        REQUIRE(is_primary(b));
        const auto o = divmod_round(a, b);
        REQUIRE(o.q == Eisenstein(1));
        REQUIRE(remove_ramified(o.r).m == m);
    }
    for (unsigned k = 1; k <= 200; ++k) {
        const auto [a, b] = even_cubic_bad(k);
        REQUIRE(is_primary(b));
        REQUIRE_FALSE(is_ramified_divisible(a));
    }
    for (unsigned m = 2; m <= 200; ++m) REQUIRE(is_primary(even_quartic_bad(m).second));
}

TEST_CASE("growth rate") {
    CHECK(std::abs(to_double(growth_rate(200)) - 2.1144) < 0.005);
    CHECK(std::abs(to_double(growth_rate(10)) - std::log(963976549.0) / 10) < 1e-12);
    for (unsigned n = 20; n < 60; ++n) REQUIRE(std::abs(to_double(growth_step(n)) - 2.1144) < 0.005);
    // The logarithm carries 64 fractional bits.
    const mpq_class g = growth_rate(50) * 50;
    CHECK(mpz_popcount(g.get_den_mpz_t()) == 1);
    CHECK(mpz_sizeinbase(g.get_den_mpz_t(), 2) <= 65);
    CHECK_THROWS_AS(growth_rate(9), DomainError);
}

TEST_CASE("property: cubic family is 2-primary and locks in") {
    const auto xs = xi_cubic_terms(500);
    for (unsigned n = 0; n <= 500; ++n) {
        REQUIRE(is_two_primary(xs[n]));
        REQUIRE(classify(xs[n]).tag == EisTag::primary_minus);
        REQUIRE(above_floor(xs[n]));
    }
    for (unsigned n = 3; n <= 500; ++n) {
        const auto o = divmod_round(xs[n], xs[n - 1]);
        REQUIRE(o.q == Eisenstein(0, 3));
        REQUIRE(o.r == xs[n - 2]);
    }
}

TEST_CASE("property: quartic family locks in") {
    const auto xs = xi_quartic_terms(500);
    unsigned last_miss = 0;
    for (unsigned n = 2; n <= 500; ++n) {
        REQUIRE(above_floor(xs[n]));
        if (divmod_round(xs[n], xs[n - 1]).q != Gaussian(2, 2)) last_miss = n;
    }
    CHECK(last_miss <= 5);
}

}
