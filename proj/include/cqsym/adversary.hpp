#pragma once

#include <utility>
#include <vector>

#include "cqsym/ring.hpp"

namespace cqsym {

// xi_n = coefficient * xi_{n-1} + xi_{n-2}.
template <class R>
struct RecurrenceSpec {
    R coefficient;
    R xi0;
    R xi1;
    // |dominant root| and |minor root|, for reports only.
    double dominant_abs;
    double minor_abs;
};

// xi_0 = -1, xi_1 = 2, coefficient 3w. Every term is 2 mod 3.
RecurrenceSpec<Eisenstein> cubic_recurrence();
// xi_0 = 1, xi_1 = 5, coefficient 2(1 + i).
RecurrenceSpec<Gaussian> quartic_recurrence();

// Terms 0..n inclusive.
std::vector<Eisenstein> xi_cubic_terms(unsigned n);
std::vector<Gaussian> xi_quartic_terms(unsigned n);
Eisenstein xi_cubic(unsigned n);
Gaussian xi_quartic(unsigned n);

// (3^m + (1-w)^m + 1, 3^m + 1): the first quotient is 1 and the remainder is
// (1-w)^m, so m ramified factors come out in the first step. m >= 1.
std::pair<Eisenstein, Eisenstein> step4_stress(unsigned m);

// ((3k+2) w, 1 + (3k+3) w), k >= 1.
std::pair<Eisenstein, Eisenstein> even_cubic_bad(unsigned k);

// (4m + 1, 4m - 3), m >= 2.
std::pair<Gaussian, Gaussian> even_quartic_bad(unsigned m);

// ln N(xi_n) / n for the cubic sequence, n >= 10: the logarithm of the exact
// norm, rounded to 64 fractional bits, divided by n.
mpq_class growth_rate(unsigned n);

// ln N(xi_{n+1}) - ln N(xi_n), n >= 1, to the same precision.
mpq_class growth_step(unsigned n);

}  // namespace cqsym
