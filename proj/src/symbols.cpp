#include "cqsym/symbols.hpp"

#include <string>

namespace cqsym {

namespace {

long small_mod(const Int& x, unsigned long m, CostCounters* cost = nullptr) {
    return static_cast<long>(imod_small(x, m, cost));
}

long long mod_ll(long long x, long long m) {
    const long long r = x % m;
    return r < 0 ? r + m : r;
}

enum class Mode { exact, newton, even };

Mode mode_of(Backend b) { return b == Backend::exact ? Mode::exact : Mode::newton; }

void require_primary(const Eisenstein& beta, const char* who) {
    if (small_mod(beta.b, 3) != 0)
        throw DomainError(std::string(who) + ": modulus " + format(beta) +
                          " is not primary (needs d = 0 mod 3)");
    if (small_mod(beta.a, 3) == 0)
        throw DomainError(std::string(who) + ": modulus " + format(beta) +
                          " is not primary (needs c != 0 mod 3)");
}

void require_primary(const Gaussian& beta, const char* who) {
    if (small_mod(beta.b, 2) != 0)
        throw DomainError(std::string(who) + ": modulus " + format(beta) +
                          " is not primary (needs d = 0 mod 2)");
    if (small_mod(beta.a + beta.b, 4) != 1)
        throw DomainError(std::string(who) + ": modulus " + format(beta) +
                          " is not primary (needs c + d = 1 mod 4)");
}

// u = +-w^k.
int rho_exponent(const Eisenstein& u) {
    for (unsigned k = 0; k < 3; ++k) {
        const Eisenstein r = rho_pow(k);
        if (u == r || u == -r) return static_cast<int>(k);
    }
    throw IntegrityError("rho_exponent: not a unit");
}

// u = i^k.
int i_exponent(const Gaussian& u) {
    for (unsigned k = 0; k < 4; ++k)
        if (u == gauss_unit(k)) return static_cast<int>(k);
    throw IntegrityError("i_exponent: not a unit");
}

template <class R>
StepRecord<R> record(const R& q, const R& alpha, const R& beta) {
    StepRecord<R> s;
    s.q = q;
    s.bitlen_alpha = coord_bitlen(alpha);
    s.bitlen_beta = coord_bitlen(beta);
    s.bitlen_q = coord_bitlen(q);
    return s;
}

// Closes a run whose modulus has become a unit. After at least one division
// the last, imagined division alpha_t = q_t beta_t is recorded as terminal.
template <class Run, class R>
void finish_at_unit(Run& run, const R& alpha, const R& beta, long long acc) {
    auto& tr = run.trace;
    if (!tr.steps.empty()) {
        StepRecord<R> s = record(exact_quotient(alpha, beta), alpha, beta);
        s.terminal = true;
        tr.steps.push_back(std::move(s));
        ++tr.counters.div_steps;
    }
    tr.gcd = beta;
    run.symbol = decltype(run.symbol)::value_type::power(acc);
}

template <class R>
DivisionOutcome<R> divide(Mode mode, const R& alpha, const R& beta, CostCounters* cost) {
    switch (mode) {
        case Mode::exact: return divmod_round(alpha, beta, cost);
        case Mode::newton: return divmod_newton(alpha, beta, cost);
        default: return divmod_even(alpha, beta, cost);
    }
}

CubicRun run_cubic(Eisenstein alpha, Eisenstein beta, Mode mode, std::uint64_t cap) {
    CubicRun run;
    RunTrace<Eisenstein>& tr = run.trace;
    CostCounters* cost = &tr.counters;
    long long acc = 0;
    std::uint64_t divisions = 0;
    for (;;) {
        if (is_unit(beta)) {
            finish_at_unit(run, alpha, beta, acc);
            return run;
        }
        const Int c(small_mod(beta.a, 9, cost)), d(small_mod(beta.b, 9, cost));
        if (is_unit(alpha)) {
            acc += cubic_step_exponent(0, rho_exponent(alpha), c, d);
            tr.gcd = Eisenstein(1);
            run.symbol = CubicSymbol::power(acc);
            return run;
        }
        if (mode == Mode::even && divisions >= cap) {
            run.cap_exceeded = true;
            tr.gcd = beta;
            return run;
        }
        DivisionOutcome<Eisenstein> o = divide(mode, alpha, beta, cost);
        ++divisions;
        ++cost->div_steps;
        cost->remainder_volume += bitlen(norm(beta));
        StepRecord<Eisenstein> s = record(o.q, alpha, beta);
        if (is_zero(o.r)) {
            s.terminal = true;
            tr.steps.push_back(std::move(s));
            tr.gcd = beta;
            run.symbol = CubicSymbol::vanishing();
            return run;
        }
        Eisenstein rest = std::move(o.r);
        if (mode != Mode::even) {
            RamifiedSplit<Eisenstein> rs = remove_ramified(rest, cost);
            s.m = rs.m;
            s.ramified_tests = rs.m + 1;
            rest = std::move(rs.rest);
        }
        UnitSplit<Eisenstein> us = unit_normalize(rest, cost);
        s.n = us.n;
        acc += cubic_step_exponent(s.m, s.n, c, d);
        tr.steps.push_back(std::move(s));
        alpha = std::move(beta);
        beta = std::move(us.rest);
    }
}

QuarticRun run_quartic(Gaussian alpha, Gaussian beta, Mode mode, std::uint64_t cap) {
    QuarticRun run;
    RunTrace<Gaussian>& tr = run.trace;
    CostCounters* cost = &tr.counters;
    long long acc = 0;
    std::uint64_t divisions = 0;
    for (;;) {
        if (is_unit(beta)) {
            finish_at_unit(run, alpha, beta, acc);
            return run;
        }
        const Int c(small_mod(beta.a, 16, cost)), d(small_mod(beta.b, 16, cost));
        if (is_unit(alpha)) {
            // e'' = 1 removes the sign factor, leaving (i^k / beta) = i^(-k(c-1)/2).
            acc += quartic_step_exponent(0, i_exponent(alpha), c, d, Int(1));
            tr.gcd = Gaussian(1);
            run.symbol = QuarticSymbol::power(acc);
            return run;
        }
        if (mode == Mode::even && divisions >= cap) {
            run.cap_exceeded = true;
            tr.gcd = beta;
            return run;
        }
        DivisionOutcome<Gaussian> o = divide(mode, alpha, beta, cost);
        ++divisions;
        ++cost->div_steps;
        cost->remainder_volume += bitlen(norm(beta));
        StepRecord<Gaussian> s = record(o.q, alpha, beta);
        if (is_zero(o.r)) {
            s.terminal = true;
            tr.steps.push_back(std::move(s));
            tr.gcd = beta;
            run.symbol = QuarticSymbol::vanishing();
            return run;
        }
        Gaussian rest = std::move(o.r);
        if (mode != Mode::even) {
            RamifiedSplit<Gaussian> rs = remove_even(rest, cost);
            s.m = rs.m;
            s.ramified_tests = rs.m + 1;
            rest = std::move(rs.rest);
        }
        UnitSplit<Gaussian> us = unit_normalize(rest, cost);
        s.n = us.n;
        acc += quartic_step_exponent(s.m, s.n, c, d, Int(small_mod(us.rest.a, 16, cost)));
        tr.steps.push_back(std::move(s));
        alpha = std::move(beta);
        beta = std::move(us.rest);
    }
}

}  // namespace

std::string format(const CubicSymbol& s) {
    return s.zero ? std::string("0") : "w^" + std::to_string(s.exponent);
}

std::string format(const QuarticSymbol& s) {
    return s.zero ? std::string("0") : "i^" + std::to_string(s.exponent);
}

int cubic_step_exponent(std::uint64_t m, long long n, const Int& c, const Int& d,
                        ExponentForm form) {
    const long long c9 = small_mod(c, 9), d9 = small_mod(d, 9);
    if (c9 % 3 == 0 || d9 % 3 != 0)
        throw DomainError("cubic_step_exponent: needs c != 0 and d = 0 mod 3");
    const long long mm = static_cast<long long>(m % 3), nn = mod_ll(n, 3);
    const long long a = (c9 * c9 - 1) / 3;
    long long e;
    if (form == ExponentForm::direct) {
        e = -mm * a + nn * ((c9 * c9 - c9 * d9 - 1) / 3);
    } else {
        e = (2 * mm + nn) * a - nn * (c9 * d9 / 3);
    }
    return static_cast<int>(mod_ll(e, 3));
}

int quartic_step_exponent(std::uint64_t m, long long n, const Int& c, const Int& d,
                          const Int& e2) {
    const long long c16 = small_mod(c, 16), d16 = small_mod(d, 16), e16 = small_mod(e2, 16);
    if (d16 % 2 != 0 || (c16 + d16) % 4 != 1)
        throw DomainError("quartic_step_exponent: needs d = 0 mod 2 and c + d = 1 mod 4");
    if (e16 % 2 == 0) throw DomainError("quartic_step_exponent: e'' must be odd");
    const long long mm = static_cast<long long>(m % 4), nn = mod_ll(n, 4);
    const long long t = mm * ((c16 - d16 - d16 * d16 - 1) / 4) - nn * ((c16 - 1) / 2);
    const long long sign = ((e16 - 1) * (c16 - 1) / 4) % 2;
    return static_cast<int>(mod_ll(t + 2 * sign, 4));
}

CubicRun cubic_jacobi(const Eisenstein& alpha, const Eisenstein& beta, Backend backend) {
    require_primary(beta, "cubic_jacobi");
    return run_cubic(alpha, beta, mode_of(backend), 0);
}

QuarticRun quartic_jacobi(const Gaussian& alpha, const Gaussian& beta, Backend backend) {
    require_primary(beta, "quartic_jacobi");
    return run_quartic(alpha, beta, mode_of(backend), 0);
}

CubicRun cubic_jacobi_even(const Eisenstein& alpha, const Eisenstein& beta,
                           std::uint64_t step_cap) {
    require_primary(beta, "cubic_jacobi_even");
    if (is_ramified_divisible(alpha))
        throw DomainError("cubic_jacobi_even: alpha = " + format(alpha) +
                          " is divisible by 1 - w");
    return run_cubic(alpha, beta, Mode::even, step_cap);
}

QuarticRun quartic_jacobi_even(const Gaussian& alpha, const Gaussian& beta,
                               std::uint64_t step_cap) {
    require_primary(beta, "quartic_jacobi_even");
    if (is_even_divisible(alpha))
        throw DomainError("quartic_jacobi_even: alpha = " + format(alpha) +
                          " is divisible by 1 + i");
    return run_quartic(alpha, beta, Mode::even, step_cap);
}

CubicRun cubic_jacobi_ideal(const Eisenstein& alpha, const Eisenstein& beta, Backend backend) {
    if (is_zero(beta) || is_ramified_divisible(beta))
        throw DomainError("cubic_jacobi: modulus must be nonzero and prime to 1 - w");
    return cubic_jacobi(alpha, unit_normalize(beta).rest, backend);
}

QuarticRun quartic_jacobi_ideal(const Gaussian& alpha, const Gaussian& beta, Backend backend) {
    if (is_zero(beta) || is_even_divisible(beta))
        throw DomainError("quartic_jacobi: modulus must be nonzero and prime to 1 + i");
    return quartic_jacobi(alpha, unit_normalize(beta).rest, backend);
}

}  // namespace cqsym
