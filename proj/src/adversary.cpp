#include "cqsym/adversary.hpp"

#include <mpfr.h>

namespace cqsym {

namespace {

template <class R>
std::vector<R> terms(const RecurrenceSpec<R>& spec, unsigned n) {
    std::vector<R> xs{spec.xi0, spec.xi1};
    xs.reserve(n + 1);
    for (unsigned k = 2; k <= n; ++k) xs.push_back(spec.coefficient * xs[k - 1] + xs[k - 2]);
    xs.resize(n + 1);
    return xs;
}

// ln x rounded to a multiple of 2^-64.
mpq_class log_dyadic(const Int& x) {
    mpfr_t v;
    mpfr_init2(v, 192);
    mpfr_set_z(v, x.get_mpz_t(), MPFR_RNDN);
    mpfr_log(v, v, MPFR_RNDN);
    mpfr_mul_2ui(v, v, 64, MPFR_RNDN);
    Int z;
    mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDN);
    mpfr_clear(v);
    Int den;
    mpz_setbit(den.get_mpz_t(), 64);
    mpq_class q(z, den);
    q.canonicalize();
    return q;
}

}  // namespace

RecurrenceSpec<Eisenstein> cubic_recurrence() {
    return {Eisenstein(0, 3), Eisenstein(-1), Eisenstein(2), 2.8783, 0.3474};
}

RecurrenceSpec<Gaussian> quartic_recurrence() {
    return {Gaussian(2, 2), Gaussian(1), Gaussian(5), 2.8904, 0.3460};
}

std::vector<Eisenstein> xi_cubic_terms(unsigned n) { return terms(cubic_recurrence(), n); }
std::vector<Gaussian> xi_quartic_terms(unsigned n) { return terms(quartic_recurrence(), n); }
Eisenstein xi_cubic(unsigned n) { return xi_cubic_terms(n).back(); }
Gaussian xi_quartic(unsigned n) { return xi_quartic_terms(n).back(); }

std::pair<Eisenstein, Eisenstein> step4_stress(unsigned m) {
    if (m < 1) throw DomainError("step4_stress: m must be at least 1");
    Int three;
    mpz_ui_pow_ui(three.get_mpz_t(), 3, m);
    const Eisenstein beta(three + 1);
    const Eisenstein alpha = beta + pow(Eisenstein(1, -1), m);
    if (!is_primary(beta)) throw IntegrityError("step4_stress: beta not primary");
    return {alpha, beta};
}

std::pair<Eisenstein, Eisenstein> even_cubic_bad(unsigned k) {
    if (k < 1) throw DomainError("even_cubic_bad: k must be at least 1");
    const long kk = static_cast<long>(k);
    return {Eisenstein(0L, 3 * kk + 2), Eisenstein(1L, 3 * kk + 3)};
}

std::pair<Gaussian, Gaussian> even_quartic_bad(unsigned m) {
    if (m < 2) throw DomainError("even_quartic_bad: m must be at least 2");
    const long mm = static_cast<long>(m);
    return {Gaussian(4 * mm + 1), Gaussian(4 * mm - 3)};
}

mpq_class growth_rate(unsigned n) {
    if (n < 10) throw DomainError("growth_rate: n must be at least 10");
    mpq_class r = log_dyadic(norm(xi_cubic(n))) / n;
    r.canonicalize();
    return r;
}

mpq_class growth_step(unsigned n) {
    if (n < 1) throw DomainError("growth_step: n must be at least 1");
    const std::vector<Eisenstein> xs = xi_cubic_terms(n + 1);
    mpq_class r = log_dyadic(norm(xs[n + 1])) - log_dyadic(norm(xs[n]));
    r.canonicalize();
    return r;
}

}  // namespace cqsym
