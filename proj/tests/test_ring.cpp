#include <doctest.h>

#include <random>

#include "cqsym/verify.hpp"
#include "oracles.hpp"

using namespace cqsym;

TEST_SUITE("ring") {

TEST_CASE("eisenstein products") {
    CHECK(Eisenstein(1, 1) * Eisenstein(1, 1) == Eisenstein(0, 1));
    const Eisenstein rho2 = Eisenstein(0, 1) * Eisenstein(0, 1);
    CHECK(rho2 == Eisenstein(-1, -1));
    CHECK(Eisenstein(3, 1) * rho2 == Eisenstein(-2, -3));
    CHECK(norm(Eisenstein(3, 1)) == 7);
    CHECK(norm(Eisenstein(-2, -3)) == 7);
    // xi_3 = 3w xi_2 + xi_1
    CHECK(Eisenstein(0, 3) * Eisenstein(-1, 6) + Eisenstein(2) == Eisenstein(-16, -21));
}

TEST_CASE("norm and conjugate") {
    CHECK(norm(Eisenstein(-1, 6)) == 43);
    CHECK(norm(Eisenstein(0)) == 0);
    CHECK(conj(Eisenstein(2, 1)) == Eisenstein(1, -1));
    CHECK(Eisenstein(2, 1) * Eisenstein(1, -1) == Eisenstein(3));
    CHECK(norm(Gaussian(-1, 2)) == 5);
    CHECK(Gaussian(2, 2) * Gaussian(5) + Gaussian(1) == Gaussian(11, 10));
    CHECK(Gaussian(3, 4) * conj(Gaussian(3, 4)) == Gaussian(25));
}

TEST_CASE("bitlen") {
    CHECK(bitlen(Int(0)) == 1);
    CHECK(bitlen(Int(-8)) == 4);
    CHECK(bitlen(Int(1)) == 1);
    CHECK(bitlen(Int(255)) == 8);
    CHECK(bitlen(Int(256)) == 9);
}

TEST_CASE("classification") {
    CHECK(classify(Eisenstein(2)).tag == EisTag::primary_minus);
    CHECK(classify(Eisenstein(1, 6)).tag == EisTag::primary_plus);
    CHECK(classify(Eisenstein(1, 2)).tag == EisTag::ramified_divisible);
    CHECK(classify(Eisenstein(0)).tag == EisTag::zero);
    CHECK(classify(Eisenstein(0, 1)).tag == EisTag::unit);
    const EisClass one = classify(Eisenstein(1));
    CHECK(one.tag == EisTag::primary_plus);
    CHECK(one.unit);
    CHECK(classify(Eisenstein(-1)).tag == EisTag::primary_minus);
    CHECK(is_two_primary(Eisenstein(2)));
    CHECK_FALSE(is_two_primary(Eisenstein(1, 6)));

    CHECK(classify(Gaussian(-1, 2)).tag == GaussTag::primary);
    CHECK(classify(Gaussian(2, 1)).tag == GaussTag::other);
    CHECK(classify(Gaussian(1, 1)).tag == GaussTag::even_divisible);
    CHECK(classify(Gaussian(0, 1)).tag == GaussTag::unit);
    CHECK(classify(Gaussian(1)).tag == GaussTag::primary);
}

TEST_CASE("ramified removal") {
    auto s = remove_ramified(Eisenstein(1, 1));
    CHECK(s.m == 0);
    CHECK(s.rest == Eisenstein(1, 1));
    s = remove_ramified(Eisenstein(3));
    CHECK(s.m == 2);
    CHECK(s.rest == Eisenstein(1, 1));
    CHECK(pow(Eisenstein(1, -1), 2) * Eisenstein(1, 1) == Eisenstein(3));
    s = remove_ramified(pow(Eisenstein(1, -1), 5));
    CHECK(s.m == 5);
    CHECK(s.rest == Eisenstein(1));

    auto g = remove_even(Gaussian(2));
    CHECK(g.m == 2);
    CHECK(g.rest == Gaussian(0, -1));
    CHECK(unit_normalize(Gaussian(0, -1)).n == 3);
    CHECK(unit_normalize(Gaussian(0, -1)).rest == Gaussian(1));
    CHECK(remove_even(Gaussian(5)).m == 0);
    CHECK(unit_normalize(Gaussian(5)).n == 0);
    const auto u3 = unit_normalize(Gaussian(3));
    CHECK(u3.n == 2);
    CHECK(u3.rest == Gaussian(-3));
}

TEST_CASE("unit normalization") {
    auto u = unit_normalize(Eisenstein(-2, -3));
    CHECK(u.n == 0);
    CHECK(u.rest == Eisenstein(-2, -3));
    u = unit_normalize(Eisenstein(1, 1));
    CHECK(u.n == 2);
    CHECK(u.rest == Eisenstein(-1));
    u = unit_normalize(Eisenstein(1, 6));
    CHECK(u.n == 0);
    CHECK_THROWS_AS(unit_normalize(Eisenstein(1, 2)), DomainError);
    CHECK_THROWS_AS(unit_normalize(Eisenstein(0)), DomainError);
    CHECK_THROWS_AS(unit_normalize(Gaussian(1, 1)), DomainError);
}

TEST_CASE("parse and format") {
    CHECK(parse_eisenstein("-16-21w") == Eisenstein(-16, -21));
    CHECK(parse_eisenstein("5") == Eisenstein(5));
    CHECK(parse_gaussian("-1+2i") == Gaussian(-1, 2));
    CHECK(parse_eisenstein("w") == Eisenstein(0, 1));
    CHECK(parse_eisenstein("-w") == Eisenstein(0, -1));
    CHECK(parse_eisenstein("5w") == Eisenstein(0, 5));
    CHECK(parse_eisenstein("1+w") == Eisenstein(1, 1));
    CHECK(format(Eisenstein(0)) == "0");
    CHECK(format(Eisenstein(1, -1)) == "1-w");
    CHECK(format(Eisenstein(0, -21)) == "-21w");
    CHECK(format(Gaussian(11, 10)) == "11+10i");

    CHECK_THROWS_AS(parse_eisenstein(""), ParseError);
    CHECK_THROWS_AS(parse_eisenstein("1+2i"), ParseError);
    CHECK_THROWS_AS(parse_gaussian("3x"), ParseError);
    try {
        parse_eisenstein("12+3q");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("property: products against the matrix representation") {
    std::mt19937_64 rng(1);
    const Int bound = Int(1) << 200;
    for (int i = 0; i < 2000; ++i) {
        const Eisenstein x = random_eisenstein(rng, bound), y = random_eisenstein(rng, bound);
        REQUIRE(x * y == oracle::product(x, y));
        REQUIRE(norm(x) == oracle::determinant(x));
        REQUIRE(norm(x * y) == norm(x) * norm(y));
        REQUIRE(x * conj(x) == Eisenstein(norm(x)));
        const Gaussian g = random_gaussian(rng, bound), h = random_gaussian(rng, bound);
        REQUIRE(g * h == oracle::product(g, h));
        REQUIRE(norm(g) == oracle::determinant(g));
        REQUIRE(norm(g * h) == norm(g) * norm(h));
    }
}

TEST_CASE("property: norm comparison inequality") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 10000; ++i) {
        const Eisenstein x = random_eisenstein(rng, Int(1) << 64);
        const Int n = norm(x), s = x.a * x.a + x.b * x.b;
        REQUIRE(2 * n <= 3 * s);
        REQUIRE(s <= 2 * n);
    }
}

TEST_CASE("property: classification, removal and normalization") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 5000; ++i) {
        Eisenstein x = random_eisenstein(rng, Int(1000));
        const Eisenstein g = x * pow(Eisenstein(1, -1), static_cast<unsigned>(i % 7));
        const bool ram = (g.a + g.b) % 3 == 0;
        REQUIRE((classify(g).tag == EisTag::ramified_divisible) == (ram && !is_unit(g)));
        const auto rs = remove_ramified(g);
        REQUIRE(pow(Eisenstein(1, -1), static_cast<unsigned>(rs.m)) * rs.rest == g);
        REQUIRE_FALSE(is_ramified_divisible(rs.rest));
        const auto us = unit_normalize(rs.rest);
        REQUIRE(rho_pow(us.n) * us.rest == rs.rest);
        REQUIRE(is_primary(us.rest));
        int primaries = 0;
        for (unsigned k = 0; k < 3; ++k)
            primaries += is_primary(exact_quotient(rs.rest, rho_pow(k))) ? 1 : 0;
        REQUIRE(primaries == 1);

        const Gaussian h = random_gaussian(rng, Int(1000)) * pow(Gaussian(1, 1), static_cast<unsigned>(i % 5));
        REQUIRE((classify(h).tag == GaussTag::even_divisible) == ((h.a + h.b) % 2 == 0 && !is_unit(h)));
        const auto re = remove_even(h);
        REQUIRE(pow(Gaussian(1, 1), static_cast<unsigned>(re.m)) * re.rest == h);
        const auto ug = unit_normalize(re.rest);
        REQUIRE(gauss_unit(ug.n) * ug.rest == re.rest);
        REQUIRE(is_primary(ug.rest));
    }
}

TEST_CASE("property: text round trip on large coordinates") {
    std::mt19937_64 rng(4);
    const Int bound = Int(1) << 1024;
    for (int i = 0; i < 10000; ++i) {
        Eisenstein x(random_int(rng, -bound, bound), random_int(rng, -bound, bound));
        if (i % 10 == 0) x.b = 0;
        if (i % 10 == 1) x.a = 0;
        if (i % 10 == 2) x.b = (i % 20 == 2) ? 1 : -1;
        REQUIRE(parse_eisenstein(format(x)) == x);
        const Gaussian g(x.a, x.b);
        REQUIRE(parse_gaussian(format(g)) == g);
    }
}

}
