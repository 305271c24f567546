#include "cqsym/residue.hpp"

#include <optional>
#include <string>
#include <utility>

namespace cqsym {

namespace {

template <class R>
R power_mod(R base, Int e, const R& pi) {
    R result(1);
    base = remainder_jacobi(base, pi);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = remainder_jacobi(mul(result, base), pi);
        e >>= 1;
        if (sgn(e) > 0) base = remainder_jacobi(mul(base, base), pi);
    }
    return result;
}

template <class S, class R, class Root>
S euler_char(const R& alpha, const R& pi, int order, Root root, const char* who) {
    if (is_zero(pi) || is_unit(pi)) throw DomainError(std::string(who) + ": modulus must have norm > 1");
    const Int np = norm(pi);
    if (mpz_fdiv_ui(Int(np - 1).get_mpz_t(), order) != 0)
        throw DomainError(std::string(who) + ": norm of modulus is not 1 mod " + std::to_string(order));
    if (divides(pi, alpha)) return S::vanishing();
    const R g = power_mod(alpha, Int((np - 1) / order), pi);
    for (int k = 0; k < order; ++k)
        if (divides(pi, sub(g, root(k)))) return S::power(k);
    throw IntegrityError(std::string(who) + ": residue " + format(g) +
                         " is not a root of unity; modulus is not prime");
}

std::vector<std::uint64_t> rational_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<Eisenstein> primes_above(std::uint64_t p, const Eisenstein*) {
    if (p == 3) return {Eisenstein(1, -1)};
    if (p % 3 == 2) return {Eisenstein(Int(p))};
    const Eisenstein pi = norm_equation_eis(Int(p)).pi;
    return {pi, unit_normalize(conj(pi)).rest};
}

std::vector<Gaussian> primes_above(std::uint64_t p, const Gaussian*) {
    if (p == 2) return {Gaussian(1, 1)};
    if (p % 4 == 3) return {Gaussian(-Int(p))};
    const Gaussian pi = gaussian_prime_above(Int(p));
    return {pi, unit_normalize(conj(pi)).rest};
}

template <class S, class R, class Char>
S oracle(const R& alpha, const R& beta, Char chi, const char* who) {
    if (!is_primary(beta)) throw DomainError(std::string(who) + ": modulus must be primary");
    const Int nb = norm(beta);
    if (nb > Int(static_cast<unsigned long>(kOracleNormBound)))
        throw DomainError(std::string(who) + ": norm " + nb.get_str() + " exceeds oracle bound 10^8");
    S value = S::power(0);
    R rest = beta;
    for (std::uint64_t p : rational_prime_factors(nb.get_ui())) {
        for (const R& pi : primes_above(p, static_cast<const R*>(nullptr))) {
            while (divides(pi, rest)) {
                rest = exact_quotient(rest, pi);
                value = value * chi(alpha, pi);
            }
        }
    }
    if (!is_unit(rest)) throw IntegrityError(std::string(who) + ": factorization incomplete");
    return value;
}

// Remainder sequence on (p, r0) down to the first remainder below sqrt(p).
Int descend(const Int& p, const Int& r0) {
    Int a = p, b = r0;
    while (b * b >= p) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return b;
}

void require_prime(const Int& p, const char* who) {
    if (!is_prime(p)) throw DomainError(std::string(who) + ": " + p.get_str() + " is not prime");
}

Int inverse_mod(const Int& x, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(mod_floor(x, p)).get_mpz_t(), p.get_mpz_t()) == 0)
        throw DomainError("inverse_mod: not invertible");
    return r;
}

bool euler_residue(const Int& a, const Int& p, int e) {
    return powmod(a, Int((p - 1) / e), p) == 1;
}

// Cases settled without any computation, and domain checks.
// Returns 1 (true), 0 (false) or -1 (needs a test).
int trivial_case(const Int& a, const Int& p, Power power) {
    if (sgn(mod_floor(a, p)) == 0)
        throw DomainError("residue_test: " + a.get_str() + " is not prime to " + p.get_str());
    if (power == Power::cubic) {
        if (p == 3 || mpz_fdiv_ui(p.get_mpz_t(), 3) == 2) return 1;
        return -1;
    }
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
        throw DomainError("residue_test: quartic test needs p = 1 mod 4");
    return -1;
}

void check_power_prime(const Int& p, Power power) {
    require_prime(p, "residue_test");
    if (power == Power::quartic && mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
        throw DomainError("residue_test: quartic test needs p = 1 mod 4");
}

}  // namespace

CubicSymbol euler_cubic_char(const Eisenstein& alpha, const Eisenstein& pi) {
    return euler_char<CubicSymbol>(alpha, pi, 3, [](int k) { return rho_pow(k); },
                                   "euler_cubic_char");
}

QuarticSymbol euler_quartic_char(const Gaussian& alpha, const Gaussian& pi) {
    return euler_char<QuarticSymbol>(alpha, pi, 4, [](int k) { return gauss_unit(k); },
                                     "euler_quartic_char");
}

CubicSymbol jacobi_oracle(const Eisenstein& alpha, const Eisenstein& beta) {
    return oracle<CubicSymbol>(alpha, beta, euler_cubic_char, "jacobi_oracle");
}

QuarticSymbol jacobi_oracle(const Gaussian& alpha, const Gaussian& beta) {
    return oracle<QuarticSymbol>(alpha, beta, euler_quartic_char, "jacobi_oracle");
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int sqrt_mod_p(const Int& a_in, const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) throw DomainError("sqrt_mod_p: modulus must be an odd prime");
    const Int a = mod_floor(a_in, p);
    if (sgn(a) == 0) throw DomainError("sqrt_mod_p: zero has no root in (0, p)");
    if (powmod(a, Int((p - 1) / 2), p) != 1)
        throw DomainError("sqrt_mod_p: " + a.get_str() + " is not a square mod " + p.get_str());

    // p - 1 = q 2^s with q odd.
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (powmod(z, Int((p - 1) / 2), p) != p - 1) ++z;

    Int c = powmod(z, q, p);
    Int r = powmod(a, Int((q + 1) / 2), p);
    Int t = powmod(a, q, p);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    const Int other = p - r;
    return r < other ? r : other;
}

std::pair<Int, Int> solve_s2_3t2(const Int& p) {
    require_prime(p, "solve_s2_3t2");
    if (mpz_fdiv_ui(p.get_mpz_t(), 3) != 1) throw DomainError("solve_s2_3t2: needs p = 1 mod 3");
    const Int s0 = sqrt_mod_p(p - 3, p);
    for (const Int& root : {s0, Int(p - s0)}) {
        const Int r = descend(p, root);
        const Int rest = p - r * r;
        if (mpz_fdiv_ui(rest.get_mpz_t(), 3) != 0) continue;
        const Int t = exact_sqrt_or_neg(rest / 3);
        if (sgn(t) > 0 && sgn(r) > 0) return {r, t};
    }
    throw IntegrityError("solve_s2_3t2: descent failed for " + p.get_str());
}

NormEquationSolution norm_equation_eis(const Int& p) {
    auto [s, t] = solve_s2_3t2(p);
    NormEquationSolution out;
    out.p = p;
    out.x = s + t;
    out.y = 2 * t;
    out.s = std::move(s);
    out.t = std::move(t);
    out.pi = unit_normalize(Eisenstein(out.x, out.y)).rest;
    return out;
}

Int sqrt_neg3_from_partition(const Int& x, const Int& y, const Int& p) {
    if (x * x - x * y + y * y != p)
        throw DomainError("sqrt_neg3_from_partition: x^2 - xy + y^2 != p");
    if (sgn(mod_floor(x - y, p)) == 0) throw DomainError("sqrt_neg3_from_partition: x = y mod p");
    return mod_floor((x + y) * inverse_mod(x - y, p), p);
}

Int sqrt_neg1_from_partition(const Int& x, const Int& y, const Int& p) {
    if (x * x + y * y != p) throw DomainError("sqrt_neg1_from_partition: x^2 + y^2 != p");
    if (sgn(mod_floor(x, p)) == 0) throw DomainError("sqrt_neg1_from_partition: p divides x");
    return mod_floor(y * inverse_mod(x, p), p);
}

TwoSquares solve_x2_y2(const Int& p) {
    require_prime(p, "solve_x2_y2");
    if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1) throw DomainError("solve_x2_y2: needs p = 1 mod 4");
    const Int s0 = sqrt_mod_p(p - 1, p);
    for (const Int& root : {s0, Int(p - s0)}) {
        const Int r = descend(p, root);
        const Int y = exact_sqrt_or_neg(p - r * r);
        if (sgn(y) > 0 && sgn(r) > 0) return r < y ? TwoSquares{p, r, y} : TwoSquares{p, y, r};
    }
    throw IntegrityError("solve_x2_y2: descent failed for " + p.get_str());
}

Gaussian gaussian_prime_above(const Int& p) {
    const TwoSquares ts = solve_x2_y2(p);
    // One of x, y is even; put it on i so that unit normalization applies.
    const Gaussian g = mpz_odd_p(ts.x.get_mpz_t()) ? Gaussian(ts.x, ts.y) : Gaussian(ts.y, ts.x);
    return unit_normalize(g).rest;
}

bool residue_test(const Int& a, const Int& p, Power power, Strategy strategy) {
    check_power_prime(p, power);
    const int trivial = trivial_case(a, p, power);
    if (trivial >= 0) return trivial == 1;
    if (strategy != Strategy::reciprocity) return euler_residue(a, p, static_cast<int>(power));
    return residue_test_batch(p, {a}, power, Strategy::reciprocity).front();
}

std::vector<bool> residue_test_batch(const Int& p, const std::vector<Int>& as, Power power,
                                     Strategy strategy) {
    check_power_prime(p, power);
    std::vector<bool> out;
    out.reserve(as.size());
    if (strategy == Strategy::automatic)
        strategy = as.size() >= bitlen(p) ? Strategy::reciprocity : Strategy::euler;
    const int e = static_cast<int>(power);

    std::optional<Eisenstein> pi3;
    std::optional<Gaussian> pi4;
    for (const Int& a : as) {
        const int trivial = trivial_case(a, p, power);
        if (trivial >= 0) {
            out.push_back(trivial == 1);
            continue;
        }
        if (strategy == Strategy::euler) {
            out.push_back(euler_residue(a, p, e));
            continue;
        }
        const Int r = mod_floor(a, p);
        if (power == Power::cubic) {
            if (!pi3) pi3 = norm_equation_eis(p).pi;
            out.push_back(cubic_jacobi(Eisenstein(r), *pi3).symbol->exponent == 0);
        } else {
            if (!pi4) pi4 = gaussian_prime_above(p);
            out.push_back(quartic_jacobi(Gaussian(r), *pi4).symbol->exponent == 0);
        }
    }
    return out;
}

void partition_table(std::uint64_t n, PartitionKind kind,
                     const std::function<void(const PartitionRow&)>& emit) {
    if (n < 7) throw DomainError("partition_table: bound must be at least 7");
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i * i <= n; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    for (std::uint64_t p = 5; p <= n; ++p) {
        if (composite[p]) continue;
        if (kind == PartitionKind::s2_3t2) {
            if (p % 3 != 1) continue;
            auto [s, t] = solve_s2_3t2(Int(static_cast<unsigned long>(p)));
            emit(PartitionRow{p, std::move(s), std::move(t)});
        } else {
            if (p % 4 != 1) continue;
            TwoSquares ts = solve_x2_y2(Int(static_cast<unsigned long>(p)));
            emit(PartitionRow{p, std::move(ts.x), std::move(ts.y)});
        }
    }
}

std::vector<PartitionRow> partition_table(std::uint64_t n, PartitionKind kind) {
    std::vector<PartitionRow> rows;
    partition_table(n, kind, [&](const PartitionRow& r) { rows.push_back(r); });
    return rows;
}

}  // namespace cqsym
