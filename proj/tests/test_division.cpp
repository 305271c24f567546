#include <doctest.h>

#include <random>

#include "cqsym/adversary.hpp"
#include "cqsym/division.hpp"
#include "cqsym/verify.hpp"
#include "oracles.hpp"

using namespace cqsym;

namespace {

// N(1 - beta xi) < 2^(-2 bits), evaluated exactly.
template <class R>
bool residual_below(const R& beta, const DyadicComplex& xi, std::uint64_t bits) {
    const R prod = beta * R(xi.u, xi.v);
    const R eps(Int(Int(1) << xi.exp) - prod.a, -prod.b);
    return norm(eps) * (Int(1) << (2 * bits)) < (Int(1) << (2 * xi.exp));
}

template <class R>
void check_round_against_rationals(const R& a, const R& b) {
    const auto uv = oracle::ratio(a, b);
    const auto o = divmod_round(a, b);
    REQUIRE(o.q == R(oracle::round_half_up(uv[0]), oracle::round_half_up(uv[1])));
    REQUIRE(o.q * b + o.r == a);
    mpq_class want(norm(o.r), norm(b));
    want.canonicalize();
    REQUIRE(o.shrink == want);
}

}  // namespace

TEST_SUITE("division") {

TEST_CASE("rounded division examples") {
    auto o = divmod_round(Eisenstein(7, 3), Eisenstein(2, 1));
    CHECK(o.q == Eisenstein(3));
    CHECK(o.r == Eisenstein(1));
    const Eisenstein b(-1, 6);
    o = divmod_round(b, b);
    CHECK(o.q == Eisenstein(1));
    CHECK(o.r == Eisenstein(0));
    o = divmod_round(Eisenstein(-16, -21), Eisenstein(-1, 6));
    CHECK(o.q == Eisenstein(0, 3));
    CHECK(o.r == Eisenstein(2));
    CHECK_THROWS_AS(divmod_round(Eisenstein(1), Eisenstein(0)), DivisionByZero);
    CHECK_THROWS_AS(divmod_round(Gaussian(1), Gaussian(0)), DivisionByZero);
}

TEST_CASE("ties round toward +infinity") {
    // 1 / 2 = 1/2 exactly; -1 / 2 = -1/2.
    CHECK(divmod_round(Gaussian(1), Gaussian(2)).q == Gaussian(1));
    CHECK(divmod_round(Gaussian(-1), Gaussian(2)).q == Gaussian(0));
    CHECK(divmod_round(Eisenstein(1, 1), Eisenstein(2)).q == Eisenstein(1, 1));
}

TEST_CASE("jacobi remainder examples") {
    CHECK(remainder_jacobi(Eisenstein(7, 3), Eisenstein(2, 1)) == Eisenstein(1));
    CHECK(remainder_jacobi(Eisenstein(2, 1), Eisenstein(2, 1)) == Eisenstein(0));
    CHECK(remainder_jacobi(Eisenstein(-16, -21), Eisenstein(-1, 6)) == Eisenstein(2));
    CHECK_THROWS_AS(remainder_jacobi(Eisenstein(1), Eisenstein(0)), DivisionByZero);
}

TEST_CASE("newton inverse") {
    const DyadicComplex s = newton_start(Eisenstein(1));
    CHECK(s == DyadicComplex{Int(1), Int(0), 4});
    for (std::uint64_t m : {1u, 5u, 16u, 100u}) {
        const DyadicComplex xi = newton_inverse(Eisenstein(1), m);
        CHECK(residual_below(Eisenstein(1), xi, m + kGuardBits));
    }
    const DyadicComplex xi = newton_inverse(Eisenstein(2, 1), 16);
    CHECK(residual_below(Eisenstein(2, 1), xi, 16 + kGuardBits));
    CHECK(residual_below(Gaussian(3, -2), newton_inverse(Gaussian(3, -2), 40), 40 + kGuardBits));
    CHECK_THROWS_AS(newton_inverse(Eisenstein(0), 4), DivisionByZero);
    CHECK_THROWS_AS(newton_inverse(Eisenstein(3), 0), DomainError);
}

TEST_CASE("property: starting error bracket") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const Int bound = Int(1) << (1 + i % 300);
        // beta xi_0 = N(beta) / 2^e, so eps_0 = 1 - N(beta)/2^e is real.
        const Eisenstein b = random_eisenstein(rng, bound);
        const DyadicComplex s = newton_start(b);
        REQUIRE(b * Eisenstein(s.u, s.v) == Eisenstein(norm(b)));
        const mpq_class eps = 1 - mpq_class(norm(b), Int(Int(1) << s.exp));
        REQUIRE(eps >= mpq_class(1, 4));
        REQUIRE(eps <= mpq_class(31, 32));

        const Gaussian g = random_gaussian(rng, bound);
        const DyadicComplex t = newton_start(g);
        const mpq_class eg = 1 - mpq_class(norm(g), Int(Int(1) << t.exp));
        REQUIRE(eg >= mpq_class(1, 2));
        REQUIRE(eg <= mpq_class(15, 16));
    }
}

TEST_CASE("property: newton residual") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 2000; ++i) {
        const Eisenstein b = random_eisenstein(rng, Int(1) << (1 + i % 400));
        const std::uint64_t m = 1 + i % 300;
        REQUIRE(residual_below(b, newton_inverse(b, m), m + kGuardBits));
        const Gaussian g = random_gaussian(rng, Int(1) << (1 + i % 400));
        REQUIRE(residual_below(g, newton_inverse(g, m), m + kGuardBits));
    }
}

TEST_CASE("newton division tracks the exact quotient on the bad sequence") {
    const std::vector<Eisenstein> xs = xi_cubic_terms(64);
    for (unsigned n = 3; n <= 64; ++n) {
        const auto o = divmod_newton(xs[n], xs[n - 1]);
        REQUIRE(o.q == Eisenstein(0, 3));
        REQUIRE(o.r == xs[n - 2]);
    }
    const auto o = divmod_newton(Eisenstein(5, -7), Eisenstein(5, -7));
    CHECK(o.q == Eisenstein(1));
    CHECK(o.r == Eisenstein(0));
}

TEST_CASE("even-quotient examples") {
    auto o = divmod_even(Eisenstein(7), Eisenstein(2, 1));
    CHECK(o.q == Eisenstein(2, -2));
    CHECK(o.r == Eisenstein(1));
    o = divmod_even(Eisenstein(2, 2), Eisenstein(2, 1));
    CHECK(o.q == Eisenstein(2, 1));
    CHECK(o.r == Eisenstein(-1, -1));
    const auto g = divmod_even(Gaussian(21), Gaussian(17));
    CHECK(g.q == Gaussian(2));
    CHECK(g.r == Gaussian(-13));
    CHECK_THROWS_AS(divmod_even(Eisenstein(5), Eisenstein(0, 1)), DomainError);
    CHECK_THROWS_AS(divmod_even(Gaussian(5), Gaussian(0)), DomainError);
}

TEST_CASE("even-quotient choice is the least remainder among admissible units") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 3000; ++i) {
        const Eisenstein a = random_eisenstein(rng, Int(500));
        const Eisenstein b = random_eisenstein(rng, Int(60));
        if (is_unit(b)) continue;
        const auto o = divmod_even(a, b);
        const auto r0 = divmod_round(a, b);
        if ((r0.q.a + r0.q.b) % 3 == 0 || is_zero(r0.r)) {
            REQUIRE(o.q == r0.q);
            continue;
        }
        Int best = -1;
        for (unsigned k = 0; k < 6; ++k) {
            const Eisenstein q = r0.q + eis_unit(k);
            if ((q.a + q.b) % 3 != 0) continue;
            const Int n = norm(a - q * b);
            if (n < norm(b) && (best < 0 || n < best)) best = n;
        }
        REQUIRE(norm(o.r) == best);
    }
    for (int i = 0; i < 3000; ++i) {
        const Gaussian a = random_gaussian(rng, Int(500));
        const Gaussian b = random_gaussian(rng, Int(60));
        if (is_unit(b)) continue;
        const auto o = divmod_even(a, b);
        REQUIRE((is_even_divisible(o.q) || is_zero(o.r)));
        REQUIRE(o.q * b + o.r == a);
        REQUIRE(norm(o.r) < norm(b));
    }
}

TEST_CASE("exact even division keeps its quotient") {
    const auto o = divmod_even(Gaussian(-2, 1), Gaussian(1, 2));
    CHECK(o.q == Gaussian(0, 1));
    CHECK(is_zero(o.r));
}

TEST_CASE("property: division contracts") {
    std::mt19937_64 rng(14);
    const Int scale = Int(1) << kGuardBits;
    for (int i = 0; i < 10000; ++i) {
        const Int bound = Int(1) << (1 + i % 200);
        const Eisenstein a = random_eisenstein(rng, bound), b = random_eisenstein(rng, bound);
        check_round_against_rationals(a, b);
        const auto ex = divmod_round(a, b);
        REQUIRE(4 * norm(ex.r) <= 3 * norm(b));
        const Eisenstein g = remainder_jacobi(a, b);
        REQUIRE(divides(b, a - g));
        REQUIRE(4 * norm(g) <= 3 * norm(b));
        const auto uv = oracle::ratio(a, b);
        const bool tie = mpz_cmp_ui(uv[0].get_den_mpz_t(), 2) == 0 || mpz_cmp_ui(uv[1].get_den_mpz_t(), 2) == 0;
        if (!tie) REQUIRE(g == ex.r);
        const auto nw = divmod_newton(a, b);
        REQUIRE(nw.q * b + nw.r == a);
        REQUIRE(4 * scale * norm(nw.r) <= (3 * scale + 12) * norm(b));
        if (!is_unit(b)) {
            const auto ev = divmod_even(a, b);
            REQUIRE(ev.q * b + ev.r == a);
            REQUIRE(((ev.q.a + ev.q.b) % 3 == 0 || is_zero(ev.r)));
            REQUIRE(norm(ev.r) < norm(b));
        }

        const Gaussian x = random_gaussian(rng, bound), y = random_gaussian(rng, bound);
        check_round_against_rationals(x, y);
        const auto gx = divmod_round(x, y);
        REQUIRE(2 * norm(gx.r) <= norm(y));
        const Gaussian gj = remainder_jacobi(x, y);
        REQUIRE(divides(y, x - gj));
        REQUIRE(2 * norm(gj) <= norm(y));
        const auto gn = divmod_newton(x, y);
        REQUIRE(gn.q * y + gn.r == x);
        REQUIRE(2 * scale * norm(gn.r) <= (scale + 6) * norm(y));
        if (!is_unit(y)) {
            const auto ge = divmod_even(x, y);
            REQUIRE(ge.q * y + ge.r == x);
            REQUIRE(((ge.q.a + ge.q.b) % 2 == 0 || is_zero(ge.r)));
            REQUIRE(norm(ge.r) < norm(y));
        }
    }
}

}
