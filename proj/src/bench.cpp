#include "cqsym/bench.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "cqsym/adversary.hpp"
#include "cqsym/symbols.hpp"

namespace cqsym {

namespace {

bool is_even_family(const std::string& family) { return family == "even3" || family == "even4"; }

template <class Run>
void fill(BenchRecord& rec, const Run& run) {
    const CostCounters& c = run.trace.counters;
    rec.div_steps = c.div_steps;
    rec.ramified_removals = c.ramified_removals;
    rec.mul_cost = c.mul_cost;
    rec.remainder_volume = c.remainder_volume;
    rec.cap_exceeded = run.cap_exceeded;
}

template <class R>
std::uint64_t pair_bits(const R& alpha, const R& beta) {
    return bitlen(norm(alpha * beta));
}

CubicRun run_eis(const Eisenstein& a, const Eisenstein& b, const std::string& backend,
                 std::uint64_t cap) {
    if (backend == "even") return cubic_jacobi_even(a, b, cap);
    return cubic_jacobi(a, b, backend == "newton" ? Backend::newton : Backend::exact);
}

QuarticRun run_gauss(const Gaussian& a, const Gaussian& b, const std::string& backend,
                     std::uint64_t cap) {
    if (backend == "even") return quartic_jacobi_even(a, b, cap);
    return quartic_jacobi(a, b, backend == "newton" ? Backend::newton : Backend::exact);
}

unsigned as_unsigned(std::uint64_t n) {
    if (n > 1000000000ULL) throw DomainError("bench: size out of range");
    return static_cast<unsigned>(n);
}

}  // namespace

std::string resolve_backend(const std::string& family, const std::string& backend) {
    if (family != "xi3" && family != "xi4" && family != "step4" && !is_even_family(family))
        throw DomainError("bench: unknown family '" + family + "'");
    if (backend == "auto") return is_even_family(family) ? "even" : "exact";
    if (backend != "exact" && backend != "newton" && backend != "even")
        throw DomainError("bench: unknown backend '" + backend + "'");
    return backend;
}

BenchRecord bench_one(const std::string& family, std::uint64_t n, const std::string& backend_in,
                      std::uint64_t step_cap) {
    const std::string backend = resolve_backend(family, backend_in);
    BenchRecord rec;
    rec.family = family;
    rec.n = n;
    rec.backend = backend;
    const unsigned k = as_unsigned(n);
    if (family == "xi3" || family == "step4" || family == "even3") {
        std::pair<Eisenstein, Eisenstein> in;
        if (family == "xi3") {
            if (k < 1) throw DomainError("bench: xi3 needs n >= 1");
            const std::vector<Eisenstein> xs = xi_cubic_terms(k);
            in = {xs[k], xs[k - 1]};
        } else if (family == "step4") {
            in = step4_stress(k);
        } else {
            in = even_cubic_bad(k);
        }
        rec.input_bits = pair_bits(in.first, in.second);
        fill(rec, run_eis(in.first, in.second, backend, step_cap));
    } else {
        std::pair<Gaussian, Gaussian> in;
        if (family == "xi4") {
            if (k < 1) throw DomainError("bench: xi4 needs n >= 1");
            const std::vector<Gaussian> xs = xi_quartic_terms(k);
            in = {xs[k], xs[k - 1]};
        } else {
            in = even_quartic_bad(k);
        }
        rec.input_bits = pair_bits(in.first, in.second);
        fill(rec, run_gauss(in.first, in.second, backend, step_cap));
    }
    return rec;
}

std::vector<BenchRecord> run_bench(const std::string& family, const std::vector<std::uint64_t>& sizes,
                                   const std::vector<std::string>& backends,
                                   std::uint64_t step_cap) {
    std::vector<BenchRecord> out;
    for (std::uint64_t n : sizes)
        for (const std::string& b : backends) out.push_back(bench_one(family, n, b, step_cap));
    std::stable_sort(out.begin(), out.end(), [](const BenchRecord& x, const BenchRecord& y) {
        return std::tie(x.family, x.n, x.backend) < std::tie(y.family, y.n, y.backend);
    });
    return out;
}

std::uint64_t metric_of(const BenchRecord& r, const std::string& metric) {
    if (metric == "mul_cost") return r.mul_cost;
    if (metric == "remainder_volume") return r.remainder_volume;
    if (metric == "div_steps") return r.div_steps;
    if (metric == "ramified_removals") return r.ramified_removals;
    throw DomainError("unknown metric '" + metric + "'");
}

double fit_records(const std::vector<BenchRecord>& records, const std::string& metric) {
    std::vector<FitPoint> pts;
    for (const BenchRecord& r : records)
        pts.push_back({static_cast<double>(r.n), static_cast<double>(metric_of(r, metric))});
    return fit_exponent(pts);
}

std::string bench_csv_header() {
    return "family,n,input_bits,backend,div_steps,ramified_removals,mul_cost,remainder_volume,"
           "cap_exceeded";
}

std::string to_csv(const BenchRecord& r) {
    std::ostringstream os;
    os << r.family << ',' << r.n << ',' << r.input_bits << ',' << r.backend << ',' << r.div_steps
       << ',' << r.ramified_removals << ',' << r.mul_cost << ',' << r.remainder_volume << ','
       << (r.cap_exceeded ? "true" : "false");
    return os.str();
}

std::string to_json(const BenchRecord& r) {
    nlohmann::ordered_json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["input_bits"] = r.input_bits;
    j["backend"] = r.backend;
    j["div_steps"] = r.div_steps;
    j["ramified_removals"] = r.ramified_removals;
    j["mul_cost"] = r.mul_cost;
    j["remainder_volume"] = r.remainder_volume;
    j["cap_exceeded"] = r.cap_exceeded;
    return j.dump();
}

BenchRecord bench_from_json(const std::string& text) try {
    const nlohmann::json j = nlohmann::json::parse(text);
    BenchRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<std::uint64_t>();
    r.input_bits = j.at("input_bits").get<std::uint64_t>();
    r.backend = j.at("backend").get<std::string>();
    r.div_steps = j.at("div_steps").get<std::uint64_t>();
    r.ramified_removals = j.at("ramified_removals").get<std::uint64_t>();
    r.mul_cost = j.at("mul_cost").get<std::uint64_t>();
    r.remainder_volume = j.at("remainder_volume").get<std::uint64_t>();
    r.cap_exceeded = j.at("cap_exceeded").get<bool>();
    return r;
} catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bench record: ") + e.what(), 0);
}

BenchRecord bench_from_csv(const std::string& line) try {
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw ParseError("bench record: expected 9 fields", 0);
    if (f[8] != "true" && f[8] != "false") throw ParseError("bench record: bad cap_exceeded", 0);
    BenchRecord r;
    r.family = f[0];
    r.n = std::stoull(f[1]);
    r.input_bits = std::stoull(f[2]);
    r.backend = f[3];
    r.div_steps = std::stoull(f[4]);
    r.ramified_removals = std::stoull(f[5]);
    r.mul_cost = std::stoull(f[6]);
    r.remainder_volume = std::stoull(f[7]);
    r.cap_exceeded = f[8] == "true";
    return r;
} catch (const std::logic_error&) {
    throw ParseError("bench record: bad number in '" + line + "'", 0);
}

}  // namespace cqsym
