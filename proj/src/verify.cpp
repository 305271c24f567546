#include "cqsym/verify.hpp"

#include <sstream>

#include "cqsym/division.hpp"
#include "cqsym/residue.hpp"
#include "cqsym/symbols.hpp"

namespace cqsym {

namespace {

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

template <class R>
R random_in_norm(std::mt19937_64& rng, std::uint64_t max_norm) {
    const Int nmax(static_cast<unsigned long>(max_norm));
    const Int bound = isqrt(Int(2 * nmax)) + 1;
    for (;;) {
        R x(random_int(rng, -bound, bound), random_int(rng, -bound, bound));
        if (!is_zero(x) && norm(x) <= nmax) return x;
    }
}

template <class R, class Gen>
R random_primary_in_norm(std::mt19937_64& rng, std::uint64_t max_norm, Gen gen) {
    const Int nmax(static_cast<unsigned long>(max_norm));
    const Int bound = isqrt(Int(2 * nmax)) + 1;
    for (;;) {
        R x = gen(rng, bound);
        if (norm(x) <= nmax) return x;
    }
}

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return out;
}

struct Failure {
    std::string text;
};

template <class T>
std::string str(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

template <class S>
std::string sym(const S& s) {
    return format(s);
}

void cubic_suite(std::uint64_t max_norm, VerifyReport& rep) {
    for (const Eisenstein& pi : primary_primes_eis(max_norm)) {
        for (const Eisenstein& a : nonzero_residues(pi)) {
            const CubicSymbol want = euler_cubic_char(a, pi);
            const CubicSymbol got = *cubic_jacobi(a, pi).symbol;
            const CubicSymbol got_n = *cubic_jacobi(a, pi, Backend::newton).symbol;
            ++rep.cases;
            expect(got == want && got_n == want,
                   "alpha=" + format(a) + " pi=" + format(pi) + " euler=" + sym(want) +
                       " exact=" + sym(got) + " newton=" + sym(got_n));
        }
    }
}

void quartic_suite(std::uint64_t max_norm, VerifyReport& rep) {
    for (const Gaussian& pi : primary_primes_gauss(max_norm)) {
        for (const Gaussian& a : nonzero_residues(pi)) {
            const QuarticSymbol want = euler_quartic_char(a, pi);
            const QuarticSymbol got = *quartic_jacobi(a, pi).symbol;
            const QuarticSymbol got_n = *quartic_jacobi(a, pi, Backend::newton).symbol;
            ++rep.cases;
            expect(got == want && got_n == want,
                   "alpha=" + format(a) + " pi=" + format(pi) + " euler=" + sym(want) +
                       " exact=" + sym(got) + " newton=" + sym(got_n));
        }
    }
}

void even_suite(std::uint64_t max_norm, std::mt19937_64& rng, std::uint64_t samples,
                VerifyReport& rep) {
    for (std::uint64_t i = 0; i < samples; ++i) {
        Eisenstein b = random_primary_in_norm<Eisenstein>(rng, max_norm, random_primary_eisenstein);
        Eisenstein a = random_in_norm<Eisenstein>(rng, max_norm);
        if (is_unit(b) || is_ramified_divisible(a)) continue;
        const CubicRun even = cubic_jacobi_even(a, b);
        const CubicSymbol wh = *cubic_jacobi(a, b).symbol;
        ++rep.cases;
        expect(!even.cap_exceeded && *even.symbol == wh,
               "cubic alpha=" + format(a) + " beta=" + format(b) + " even=" +
                   (even.symbol ? sym(*even.symbol) : std::string("cap")) + " wh=" + sym(wh));
        for (const auto& s : even.trace.steps)
            expect(s.m == 0 && (s.terminal || is_ramified_divisible(s.q)),
                   "cubic even quotient " + format(s.q) + " for alpha=" + format(a));
    }
    for (std::uint64_t i = 0; i < samples; ++i) {
        Gaussian b = random_primary_in_norm<Gaussian>(rng, max_norm, random_primary_gaussian);
        Gaussian a = random_in_norm<Gaussian>(rng, max_norm);
        if (is_unit(b) || is_even_divisible(a)) continue;
        const QuarticRun even = quartic_jacobi_even(a, b);
        const QuarticSymbol ei = *quartic_jacobi(a, b).symbol;
        ++rep.cases;
        expect(!even.cap_exceeded && *even.symbol == ei,
               "quartic alpha=" + format(a) + " beta=" + format(b) + " even=" +
                   (even.symbol ? sym(*even.symbol) : std::string("cap")) + " eisenstein=" + sym(ei));
    }
}

void residue_suite(std::uint64_t max_norm, VerifyReport& rep) {
    for (std::uint64_t p : primes_upto(max_norm)) {
        const Int pp(static_cast<unsigned long>(p));
        std::vector<Int> as;
        for (std::uint64_t a = 1; a < p; ++a) as.emplace_back(static_cast<unsigned long>(a));
        for (Power power : {Power::cubic, Power::quartic}) {
            if (power == Power::quartic && p % 4 != 1) continue;
            const std::vector<bool> e = residue_test_batch(pp, as, power, Strategy::euler);
            const std::vector<bool> r = residue_test_batch(pp, as, power, Strategy::reciprocity);
            for (std::size_t i = 0; i < as.size(); ++i) {
                ++rep.cases;
                expect(e[i] == r[i], "p=" + std::to_string(p) + " a=" + as[i].get_str() +
                                         " power=" + std::to_string(static_cast<int>(power)) +
                                         " euler=" + (e[i] ? "yes" : "no") +
                                         " reciprocity=" + (r[i] ? "yes" : "no"));
            }
        }
    }
}

template <class R>
void division_pair(const R& a, const R& b, bool eis, VerifyReport& rep) {
    const std::string ctx = " alpha=" + format(a) + " beta=" + format(b);
    const Int nb = norm(b);
    const auto ex = divmod_round(a, b);
    expect(ex.q * b + ex.r == a, "round identity" + ctx);
    expect(eis ? 4 * norm(ex.r) <= 3 * nb : 2 * norm(ex.r) <= nb, "round shrink" + ctx);
    const R g = remainder_jacobi(a, b);
    expect(divides(b, a - g), "jacobi congruence" + ctx);
    expect(eis ? 4 * norm(g) <= 3 * nb : 2 * norm(g) <= nb, "jacobi shrink" + ctx);
    const auto nw = divmod_newton(a, b);
    expect(nw.q * b + nw.r == a, "newton identity" + ctx);
    // N(r) <= (3/4 + 3/2^g) N(beta), resp. (1/2 + 3/2^g) N(beta).
    const Int scale = Int(1) << kGuardBits;
    expect(eis ? 4 * scale * norm(nw.r) <= (3 * scale + 12) * nb
               : 2 * scale * norm(nw.r) <= (scale + 6) * nb,
           "newton shrink" + ctx);
    if (!is_unit(b)) {
        const auto ev = divmod_even(a, b);
        expect(ev.q * b + ev.r == a, "even identity" + ctx);
        const bool div = eis ? ((ev.q.a + ev.q.b) % 3 == 0) : ((ev.q.a + ev.q.b) % 2 == 0);
        // An exact division keeps its quotient whatever it is.
        expect(div || is_zero(ev.r), "even quotient not divisible" + ctx);
        expect(norm(ev.r) < nb, "even shrink" + ctx);
    }
    rep.cases += 1;
}

void division_suite(std::uint64_t max_norm, std::mt19937_64& rng, std::uint64_t samples,
                    VerifyReport& rep) {
    for (std::uint64_t i = 0; i < samples; ++i)
        division_pair(random_in_norm<Eisenstein>(rng, max_norm),
                      random_in_norm<Eisenstein>(rng, max_norm), true, rep);
    for (std::uint64_t i = 0; i < samples; ++i)
        division_pair(random_in_norm<Gaussian>(rng, max_norm),
                      random_in_norm<Gaussian>(rng, max_norm), false, rep);
}

}  // namespace

Int random_int(std::mt19937_64& rng, const Int& lo, const Int& hi) {
    const Int span = hi - lo + 1;
    if (sgn(span) <= 0) throw DomainError("random_int: empty range");
    Int acc = 0;
    const std::uint64_t words = bitlen(span) / 64 + 2;
    for (std::uint64_t i = 0; i < words; ++i) {
        acc <<= 64;
        const std::uint64_t w = rng();
        acc += Int(static_cast<unsigned long>(w));
    }
    return lo + mod_floor(acc, span);
}

Eisenstein random_eisenstein(std::mt19937_64& rng, const Int& bound) {
    for (;;) {
        Eisenstein x(random_int(rng, -bound, bound), random_int(rng, -bound, bound));
        if (!is_zero(x)) return x;
    }
}

Gaussian random_gaussian(std::mt19937_64& rng, const Int& bound) {
    for (;;) {
        Gaussian x(random_int(rng, -bound, bound), random_int(rng, -bound, bound));
        if (!is_zero(x)) return x;
    }
}

Eisenstein random_primary_eisenstein(std::mt19937_64& rng, const Int& bound) {
    for (;;) {
        Eisenstein x = random_eisenstein(rng, bound);
        if (is_primary(x)) return x;
    }
}

Gaussian random_primary_gaussian(std::mt19937_64& rng, const Int& bound) {
    for (;;) {
        Gaussian x = random_gaussian(rng, bound);
        if (is_primary(x)) return x;
    }
}

std::vector<Eisenstein> primary_primes_eis(std::uint64_t max_norm) {
    std::vector<std::pair<std::uint64_t, Eisenstein>> tagged;
    for (std::uint64_t p : primes_upto(max_norm)) {
        if (p == 3) continue;
        if (p % 3 == 1) {
            const Eisenstein pi = norm_equation_eis(Int(static_cast<unsigned long>(p))).pi;
            tagged.push_back({p, pi});
            tagged.push_back({p, unit_normalize(conj(pi)).rest});
        } else if (p * p <= max_norm) {
            tagged.push_back({p * p, Eisenstein(Int(static_cast<unsigned long>(p)))});
        }
    }
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Eisenstein> out;
    for (auto& t : tagged) out.push_back(std::move(t.second));
    return out;
}

std::vector<Gaussian> primary_primes_gauss(std::uint64_t max_norm) {
    std::vector<std::pair<std::uint64_t, Gaussian>> tagged;
    for (std::uint64_t p : primes_upto(max_norm)) {
        if (p == 2) continue;
        if (p % 4 == 1) {
            const Gaussian pi = gaussian_prime_above(Int(static_cast<unsigned long>(p)));
            tagged.push_back({p, pi});
            tagged.push_back({p, unit_normalize(conj(pi)).rest});
        } else if (p * p <= max_norm) {
            tagged.push_back({p * p, Gaussian(-Int(static_cast<unsigned long>(p)))});
        }
    }
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Gaussian> out;
    for (auto& t : tagged) out.push_back(std::move(t.second));
    return out;
}

template <class R>
std::vector<R> residues_impl(const R& pi) {
    const Int n = norm(pi);
    std::vector<R> out;
    const Int p = is_prime(n) ? n : isqrt(n);
    if (p * p != n && p != n) throw DomainError("nonzero_residues: modulus is not prime");
    if (p == n) {
        for (Int a = 1; a < p; ++a) out.emplace_back(a);
    } else {
        for (Int a = 0; a < p; ++a)
            for (Int b = 0; b < p; ++b)
                if (sgn(a) != 0 || sgn(b) != 0) out.emplace_back(a, b);
    }
    return out;
}

std::vector<Eisenstein> nonzero_residues(const Eisenstein& pi) { return residues_impl(pi); }
std::vector<Gaussian> nonzero_residues(const Gaussian& pi) { return residues_impl(pi); }

VerifyReport verify_suite(const std::string& suite, std::uint64_t max_norm, std::uint64_t seed,
                          std::uint64_t samples) {
    VerifyReport rep;
    rep.suite = suite;
    std::mt19937_64 rng(seed);
    try {
        if (suite == "cubic") {
            cubic_suite(max_norm, rep);
        } else if (suite == "quartic") {
            quartic_suite(max_norm, rep);
        } else if (suite == "even") {
            even_suite(max_norm, rng, samples, rep);
        } else if (suite == "residue") {
            residue_suite(max_norm, rep);
        } else if (suite == "division") {
            division_suite(max_norm, rng, samples, rep);
        } else {
            throw DomainError("verify: unknown suite '" + suite + "'");
        }
    } catch (const Failure& f) {
        rep.ok = false;
        rep.counterexample = f.text;
    }
    return rep;
}

}  // namespace cqsym
