#include "cqsym/ring.hpp"

#include <cctype>

namespace cqsym {

// ---- Eisenstein arithmetic ------------------------------------------------

Eisenstein add(const Eisenstein& x, const Eisenstein& y, CostCounters* cost) {
    return {iadd(x.a, y.a, cost), iadd(x.b, y.b, cost)};
}

Eisenstein sub(const Eisenstein& x, const Eisenstein& y, CostCounters* cost) {
    return {isub(x.a, y.a, cost), isub(x.b, y.b, cost)};
}

// (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho
Eisenstein mul(const Eisenstein& x, const Eisenstein& y, CostCounters* cost) {
    Int ac = imul(x.a, y.a, cost);
    Int bd = imul(x.b, y.b, cost);
    Int ad = imul(x.a, y.b, cost);
    Int bc = imul(x.b, y.a, cost);
    return {isub(ac, bd, cost), isub(iadd(ad, bc, cost), bd, cost)};
}

Eisenstein neg(const Eisenstein& x) { return {-x.a, -x.b}; }

Int norm(const Eisenstein& x, CostCounters* cost) {
    Int aa = imul(x.a, x.a, cost);
    Int ab = imul(x.a, x.b, cost);
    Int bb = imul(x.b, x.b, cost);
    return iadd(isub(aa, ab, cost), bb, cost);
}

Eisenstein conj(const Eisenstein& x, CostCounters* cost) { return {isub(x.a, x.b, cost), -x.b}; }

// ---- Gaussian arithmetic --------------------------------------------------

Gaussian add(const Gaussian& x, const Gaussian& y, CostCounters* cost) {
    return {iadd(x.a, y.a, cost), iadd(x.b, y.b, cost)};
}

Gaussian sub(const Gaussian& x, const Gaussian& y, CostCounters* cost) {
    return {isub(x.a, y.a, cost), isub(x.b, y.b, cost)};
}

Gaussian mul(const Gaussian& x, const Gaussian& y, CostCounters* cost) {
    Int ac = imul(x.a, y.a, cost);
    Int bd = imul(x.b, y.b, cost);
    Int ad = imul(x.a, y.b, cost);
    Int bc = imul(x.b, y.a, cost);
    return {isub(ac, bd, cost), iadd(ad, bc, cost)};
}

Gaussian neg(const Gaussian& x) { return {-x.a, -x.b}; }

Int norm(const Gaussian& x, CostCounters* cost) {
    return iadd(imul(x.a, x.a, cost), imul(x.b, x.b, cost), cost);
}

Gaussian conj(const Gaussian& x, CostCounters*) { return {x.a, -x.b}; }

// ---- units and divisibility -----------------------------------------------

bool is_unit(const Eisenstein& x) {
    if (bitlen(x.a) > 1 || bitlen(x.b) > 1) return false;
    // Coordinates in {-1, 0, 1}; norm a^2 - ab + b^2 equals 1 unless (0,0),
    // (1,-1) or (-1,1).
    if (is_zero(x)) return false;
    return sgn(x.a) * sgn(x.b) != -1;
}

bool is_unit(const Gaussian& x) {
    if (bitlen(x.a) > 1 || bitlen(x.b) > 1) return false;
    return (sgn(x.a) == 0) != (sgn(x.b) == 0);
}

Eisenstein eis_unit(unsigned k) {
    switch (k % 6) {
        case 0: return {1, 0};
        case 1: return {1, 1};
        case 2: return {0, 1};
        case 3: return {-1, 0};
        case 4: return {-1, -1};
        default: return {0, -1};
    }
}

Gaussian gauss_unit(unsigned k) {
    switch (k % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

Eisenstein rho_pow(unsigned k) { return eis_unit(2 * (k % 3)); }

Eisenstein pow(const Eisenstein& x, unsigned e) {
    Eisenstein result{1, 0};
    Eisenstein base = x;
    while (e != 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

Gaussian pow(const Gaussian& x, unsigned e) {
    Gaussian result{1, 0};
    Gaussian base = x;
    while (e != 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

namespace {

template <class R>
bool divides_impl(const R& y, const R& x) {
    if (is_zero(y)) return is_zero(x);
    const Int n = norm(y);
    const R p = mul(x, conj(y));
    return mpz_divisible_p(p.a.get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(p.b.get_mpz_t(), n.get_mpz_t());
}

template <class R>
R exact_quotient_impl(const R& x, const R& y) {
    if (is_zero(y)) throw DivisionByZero();
    const Int n = norm(y);
    const R p = mul(x, conj(y));
    return {iexact_div(p.a, n, nullptr), iexact_div(p.b, n, nullptr)};
}

}  // namespace

bool divides(const Eisenstein& y, const Eisenstein& x) { return divides_impl(y, x); }
bool divides(const Gaussian& y, const Gaussian& x) { return divides_impl(y, x); }
Eisenstein exact_quotient(const Eisenstein& x, const Eisenstein& y) { return exact_quotient_impl(x, y); }
Gaussian exact_quotient(const Gaussian& x, const Gaussian& y) { return exact_quotient_impl(x, y); }

// ---- classification -------------------------------------------------------

bool is_ramified_divisible(const Eisenstein& x, CostCounters* cost) {
    return imod_small(iadd(x.a, x.b, cost), 3, cost) == 0;
}

bool is_primary(const Eisenstein& x, CostCounters* cost) {
    return imod_small(x.b, 3, cost) == 0 && imod_small(x.a, 3, cost) != 0;
}

bool is_two_primary(const Eisenstein& x) {
    return mpz_fdiv_ui(x.b.get_mpz_t(), 3) == 0 && mpz_fdiv_ui(x.a.get_mpz_t(), 3) == 2;
}

EisClass classify(const Eisenstein& x, CostCounters* cost) {
    if (is_zero(x)) return {EisTag::zero, false, 0};
    const bool unit = is_unit(x);
    if (is_primary(x, cost)) {
        const bool plus = imod_small(x.a, 3, cost) == 1;
        return {plus ? EisTag::primary_plus : EisTag::primary_minus, unit, plus ? 1 : -1};
    }
    if (unit) return {EisTag::unit, true, 0};
    if (is_ramified_divisible(x, cost)) return {EisTag::ramified_divisible, false, 0};
    return {EisTag::other, false, 0};
}

bool is_even_divisible(const Gaussian& x, CostCounters* cost) {
    return imod_small(iadd(x.a, x.b, cost), 2, cost) == 0;
}

bool is_primary(const Gaussian& x, CostCounters* cost) {
    return imod_small(x.b, 2, cost) == 0 && imod_small(iadd(x.a, x.b, cost), 4, cost) == 1;
}

GaussClass classify(const Gaussian& x, CostCounters* cost) {
    if (is_zero(x)) return {GaussTag::zero, false};
    const bool unit = is_unit(x);
    if (is_primary(x, cost)) return {GaussTag::primary, unit};
    if (unit) return {GaussTag::unit, true};
    if (is_even_divisible(x, cost)) return {GaussTag::even_divisible, false};
    return {GaussTag::other, false};
}

// ---- ramified factors and unit normalization -----------------------------

RamifiedSplit<Eisenstein> remove_ramified(const Eisenstein& g, CostCounters* cost) {
    if (is_zero(g)) throw DomainError("remove_ramified: argument must be nonzero");
    RamifiedSplit<Eisenstein> out{0, g};
    for (;;) {
        Int s = iadd(out.rest.a, out.rest.b, cost);
        if (imod_small(s, 3, cost) != 0) break;
        Int e2 = isub(iadd(out.rest.a, out.rest.a, cost), out.rest.b, cost);
        out.rest = {iexact_div(e2, 3, cost), iexact_div(s, 3, cost)};
        ++out.m;
        if (cost != nullptr) ++cost->ramified_removals;
    }
    return out;
}

UnitSplit<Eisenstein> unit_normalize(const Eisenstein& g, CostCounters* cost) {
    if (is_zero(g)) throw DomainError("unit_normalize: argument must be nonzero");
    if (is_ramified_divisible(g, cost))
        throw DomainError("unit_normalize: argument is divisible by 1-rho (3 | a+b)");
    Eisenstein cur = g;
    for (unsigned n = 0; n < 3; ++n) {
        if (is_primary(cur, cost)) return {n, cur};
        // Division by rho: e + f rho -> (f - e) - e rho.
        cur = {isub(cur.b, cur.a, cost), -cur.a};
    }
    throw IntegrityError("unit_normalize: no primary associate in the rho-cycle");
}

RamifiedSplit<Gaussian> remove_even(const Gaussian& g, CostCounters* cost) {
    if (is_zero(g)) throw DomainError("remove_even: argument must be nonzero");
    RamifiedSplit<Gaussian> out{0, g};
    for (;;) {
        Int s = iadd(out.rest.a, out.rest.b, cost);
        if (imod_small(s, 2, cost) != 0) break;
        Int d = isub(out.rest.b, out.rest.a, cost);
        out.rest = {ishr(s, 1, cost), ishr(d, 1, cost)};
        ++out.m;
        if (cost != nullptr) ++cost->ramified_removals;
    }
    return out;
}

UnitSplit<Gaussian> unit_normalize(const Gaussian& g, CostCounters* cost) {
    if (is_zero(g)) throw DomainError("unit_normalize: argument must be nonzero");
    if (is_even_divisible(g, cost))
        throw DomainError("unit_normalize: argument is divisible by 1+i (a+b even)");
    Gaussian cur = g;
    for (unsigned n = 0; n < 4; ++n) {
        if (is_primary(cur, cost)) return {n, cur};
        // Division by i: e + f i -> f - e i.
        cur = {cur.b, -cur.a};
    }
    throw IntegrityError("unit_normalize: no primary associate among the i-multiples");
}

// ---- text form ------------------------------------------------------------

namespace {

struct Parsed {
    Int a;
    Int b;
};

Parsed parse_element(std::string_view text, char letter) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto digits_at = [&](std::size_t pos) {
        std::size_t j = pos;
        while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    auto to_int = [&](std::size_t from, std::size_t to) {
        return Int(std::string(text.substr(from, to - from)), 10);
    };
    if (n == 0) throw ParseError("empty ring element", 0);

    // Leading optional sign and digits.
    bool neg1 = false;
    bool had_sign1 = false;
    if (text[i] == '+' || text[i] == '-') {
        neg1 = text[i] == '-';
        had_sign1 = true;
        ++i;
    }
    const std::size_t d1 = i;
    i = digits_at(i);
    const bool has_digits1 = i > d1;
    Int first = has_digits1 ? to_int(d1, i) : Int(1);
    if (neg1) first = -first;

    if (i == n) {
        if (!has_digits1) throw ParseError("expected digits", i);
        return {first, 0};
    }
    if (text[i] == letter) {
        // Only a basis part: "5w", "-w", "w".
        ++i;
        if (i != n) throw ParseError("unexpected trailing character", i);
        return {0, first};
    }
    if (!has_digits1) {
        if (text[i] == 'w' || text[i] == 'i') throw ParseError("wrong basis letter for this ring", i);
        throw ParseError(had_sign1 ? "expected digits or basis letter" : "expected integer", i);
    }
    if (text[i] != '+' && text[i] != '-') {
        if (text[i] == 'w' || text[i] == 'i') throw ParseError("wrong basis letter for this ring", i);
        throw ParseError("expected '+', '-' or basis letter", i);
    }
    const bool neg2 = text[i] == '-';
    ++i;
    const std::size_t d2 = i;
    i = digits_at(i);
    Int second = i > d2 ? to_int(d2, i) : Int(1);
    if (neg2) second = -second;
    if (i == n) throw ParseError("expected basis letter", i);
    if (text[i] != letter) {
        if (text[i] == 'w' || text[i] == 'i') throw ParseError("wrong basis letter for this ring", i);
        throw ParseError("expected basis letter", i);
    }
    ++i;
    if (i != n) throw ParseError("unexpected trailing character", i);
    return {first, second};
}

std::string format_element(const Int& a, const Int& b, char letter) {
    if (sgn(a) == 0 && sgn(b) == 0) return "0";
    std::string out;
    if (sgn(a) != 0) out = a.get_str();
    if (sgn(b) != 0) {
        if (sgn(b) < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        Int mag = abs(b);
        if (mag != 1) out += mag.get_str();
        out += letter;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Eisenstein parse_eisenstein(std::string_view text) {
    auto p = parse_element(trim(text), 'w');
    return {std::move(p.a), std::move(p.b)};
}

Gaussian parse_gaussian(std::string_view text) {
    auto p = parse_element(trim(text), 'i');
    return {std::move(p.a), std::move(p.b)};
}

std::string format(const Eisenstein& x) { return format_element(x.a, x.b, 'w'); }
std::string format(const Gaussian& x) { return format_element(x.a, x.b, 'i'); }

std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << format(x); }
std::ostream& operator<<(std::ostream& os, const Gaussian& x) { return os << format(x); }

}  // namespace cqsym
