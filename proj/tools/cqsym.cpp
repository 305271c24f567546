// cqsym: cubic and quartic Jacobi symbols, residue tests, norm equations,
// adversarial inputs and cost benchmarks from the command line.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cqsym/adversary.hpp"
#include "cqsym/bench.hpp"
#include "cqsym/residue.hpp"
#include "cqsym/symbols.hpp"
#include "cqsym/verify.hpp"

namespace {

using namespace cqsym;

enum Exit { ok = 0, usage = 2, domain = 3, verify_failed = 4, cap = 5 };

struct CapExceeded {
    std::uint64_t steps;
};

template <class Run>
void print_run(const Run& run, bool trace) {
    if (run.cap_exceeded) throw CapExceeded{run.trace.counters.div_steps};
    std::cout << format(*run.symbol) << '\n';
    if (!trace) return;
    std::size_t j = 0;
    for (const auto& s : run.trace.steps) {
        std::cout << "step " << ++j << " q=" << format(s.q) << " m=" << s.m << " n=" << s.n
                  << " bits_alpha=" << s.bitlen_alpha << " bits_beta=" << s.bitlen_beta
                  << " bits_q=" << s.bitlen_q << (s.terminal ? " terminal" : "") << '\n';
    }
    std::cout << "gcd=" << format(run.trace.gcd) << '\n';
    std::cout << "cost " << snapshot(run.trace.counters).to_csv() << '\n';
}

Int parse_int(const std::string& text) {
    Int v;
    const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (text.size() == start) throw cqsym::ParseError("expected an integer", 0);
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw cqsym::ParseError("expected a digit", i);
    v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return v;
}

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const Int v = parse_int(cell);
        if (sgn(v) < 0 || !v.fits_ulong_p()) throw cqsym::ParseError("size out of range", 0);
        out.push_back(v.get_ui());
    }
    if (out.empty()) throw cqsym::ParseError("empty size list", 0);
    return out;
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic and quartic Jacobi symbols over Z[w] and Z[i]"};
    app.require_subcommand(1);

    // symbol
    std::string ring = "eis", alg = "wh", backend = "exact";
    std::string alpha_text, beta_text;
    bool trace = false;
    std::uint64_t step_cap = kDefaultStepCap;
    auto* symbol = app.add_subcommand("symbol", "Jacobi symbol (ALPHA / BETA), BETA primary");
    symbol->add_option("--ring", ring)->check(CLI::IsMember({"eis", "gauss"}));
    symbol->add_option("--alg", alg)->check(CLI::IsMember({"wh", "even"}));
    symbol->add_option("--backend", backend)->check(CLI::IsMember({"exact", "newton"}));
    symbol->add_option("--cap", step_cap, "Division cap for --alg even");
    symbol->add_flag("--trace", trace, "Print step records, gcd and counters");
    symbol->add_option("ALPHA", alpha_text)->required();
    symbol->add_option("BETA", beta_text)->required();

    // residue
    int power = 3;
    std::string strategy = "auto", p_text;
    std::vector<std::string> a_texts;
    auto* residue = app.add_subcommand("residue", "Cubic or quartic residue test mod a prime");
    residue->add_option("--power", power)->check(CLI::IsMember({3, 4}));
    residue->add_option("--strategy", strategy)->check(CLI::IsMember({"euler", "reciprocity", "auto"}));
    residue->add_option("P", p_text)->required();
    residue->add_option("A", a_texts)->required();

    // normeq
    std::string kind = "eis";
    auto* normeq = app.add_subcommand("normeq", "Solve p = s^2 + 3t^2 = x^2 - xy + y^2 or p = x^2 + y^2");
    normeq->add_option("--kind", kind)->check(CLI::IsMember({"eis", "gauss"}));
    normeq->add_option("P", p_text)->required();

    // table
    std::string table_kind = "s2_3t2";
    std::uint64_t table_max = 0;
    bool header = false;
    auto* table = app.add_subcommand("table", "Partitions for all eligible primes up to --max");
    table->add_option("--kind", table_kind)->check(CLI::IsMember({"s2_3t2", "x2_y2"}));
    table->add_option("--max", table_max)->required();
    table->add_flag("--header", header);

    // adversary
    std::string family;
    std::uint64_t family_n = 0;
    auto* adversary = app.add_subcommand("adversary", "Print an adversarial input pair");
    adversary->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"xi3", "xi4", "step4", "even3", "even4"}));
    adversary->add_option("N", family_n)->required();

    // bench
    std::string sizes_text, bench_backend = "auto", format_name = "csv", metric = "mul_cost";
    bool fit = false;
    auto* bench = app.add_subcommand("bench", "Model-cost benchmark over a family");
    bench->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"xi3", "xi4", "step4", "even3", "even4"}));
    bench->add_option("--sizes", sizes_text)->required();
    bench->add_option("--backend", bench_backend, "exact, newton, even, auto, or a comma list");
    bench->add_option("--format", format_name)->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--cap", step_cap);
    bench->add_flag("--header", header);
    bench->add_flag("--fit", fit, "Append the log-log slope of --metric against n");
    bench->add_option("--metric", metric)
        ->check(CLI::IsMember({"mul_cost", "remainder_volume", "div_steps", "ramified_removals"}));

    // verify
    std::string suite;
    std::uint64_t max_norm = 2000, seed = kDefaultSeed, samples = 10000;
    auto* verify = app.add_subcommand("verify", "Run an invariant suite against the oracles");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"cubic", "quartic", "even", "residue", "division"}));
    verify->add_option("--max-norm", max_norm);
    verify->add_option("--seed", seed);
    verify->add_option("--samples", samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*symbol) {
            if (ring == "eis") {
                const Eisenstein a = parse_eisenstein(alpha_text), b = parse_eisenstein(beta_text);
                const Backend be = backend == "newton" ? Backend::newton : Backend::exact;
                print_run(alg == "even" ? cubic_jacobi_even(a, b, step_cap) : cubic_jacobi(a, b, be),
                          trace);
            } else {
                const Gaussian a = parse_gaussian(alpha_text), b = parse_gaussian(beta_text);
                const Backend be = backend == "newton" ? Backend::newton : Backend::exact;
                print_run(alg == "even" ? quartic_jacobi_even(a, b, step_cap)
                                        : quartic_jacobi(a, b, be),
                          trace);
            }
        } else if (*residue) {
            const Int p = parse_int(p_text);
            std::vector<Int> as;
            for (const std::string& t : a_texts) as.push_back(parse_int(t));
            const Strategy st = strategy == "euler"         ? Strategy::euler
                                : strategy == "reciprocity" ? Strategy::reciprocity
                                                            : Strategy::automatic;
            const std::vector<bool> res =
                residue_test_batch(p, as, power == 3 ? Power::cubic : Power::quartic, st);
            for (std::size_t i = 0; i < as.size(); ++i)
                std::cout << a_texts[i] << (res[i] ? " yes" : " no") << '\n';
        } else if (*normeq) {
            const Int p = parse_int(p_text);
            if (kind == "eis") {
                const NormEquationSolution s = norm_equation_eis(p);
                std::cout << s.p << ' ' << s.s << ' ' << s.t << ' ' << s.x << ' ' << s.y << '\n';
            } else {
                const TwoSquares s = solve_x2_y2(p);
                std::cout << s.p << ' ' << s.x << ' ' << s.y << '\n';
            }
        } else if (*table) {
            const PartitionKind k = table_kind == "s2_3t2" ? PartitionKind::s2_3t2 : PartitionKind::x2_y2;
            if (header) std::cout << (k == PartitionKind::s2_3t2 ? "p s t" : "p x y") << '\n';
            partition_table(table_max, k, [](const PartitionRow& r) {
                std::cout << r.p << ' ' << r.u << ' ' << r.v << '\n';
            });
        } else if (*adversary) {
            const unsigned n = static_cast<unsigned>(family_n);
            if (family == "xi3") {
                if (n < 1) throw DomainError("adversary: xi3 needs N >= 1");
                const auto xs = xi_cubic_terms(n);
                std::cout << format(xs[n]) << ' ' << format(xs[n - 1]) << '\n';
            } else if (family == "xi4") {
                if (n < 1) throw DomainError("adversary: xi4 needs N >= 1");
                const auto xs = xi_quartic_terms(n);
                std::cout << format(xs[n]) << ' ' << format(xs[n - 1]) << '\n';
            } else if (family == "step4") {
                const auto [a, b] = step4_stress(n);
                std::cout << format(a) << ' ' << format(b) << '\n';
            } else if (family == "even3") {
                const auto [a, b] = even_cubic_bad(n);
                std::cout << format(a) << ' ' << format(b) << '\n';
            } else {
                const auto [a, b] = even_quartic_bad(n);
                std::cout << format(a) << ' ' << format(b) << '\n';
            }
        } else if (*bench) {
            std::vector<std::string> backends;
            for (const std::string& b : split(bench_backend)) backends.push_back(resolve_backend(family, b));
            const std::vector<std::uint64_t> sizes = parse_sizes(sizes_text);
            if (fit && sizes.size() < 4) throw cqsym::ParseError("--fit needs at least 4 sizes", 0);
            const std::vector<BenchRecord> recs = run_bench(family, sizes, backends, step_cap);
            bool capped = false;
            for (const BenchRecord& r : recs) capped = capped || r.cap_exceeded;
            std::vector<std::pair<std::string, double>> fits;
            if (fit) {
                for (const std::string& b : backends) {
                    std::vector<BenchRecord> sub;
                    for (const BenchRecord& r : recs)
                        if (r.backend == b) sub.push_back(r);
                    fits.emplace_back(b, fit_records(sub, metric));
                }
            }
            std::ostringstream fx;
            fx.precision(6);
            fx << std::fixed;
            if (format_name == "csv") {
                if (header) std::cout << bench_csv_header() << '\n';
                for (const BenchRecord& r : recs) std::cout << to_csv(r) << '\n';
                for (const auto& [b, v] : fits) {
                    fx.str("");
                    fx << v;
                    std::cout << "fit," << metric << ',' << b << ',' << fx.str() << '\n';
                }
            } else {
                std::cout << '[';
                bool first = true;
                for (const BenchRecord& r : recs) {
                    std::cout << (first ? "" : ",") << to_json(r);
                    first = false;
                }
                for (const auto& [b, v] : fits) {
                    fx.str("");
                    fx << v;
                    std::cout << (first ? "" : ",") << "{\"fit\":\"" << metric << "\",\"backend\":\"" << b
                              << "\",\"exponent\":" << fx.str() << '}';
                    first = false;
                }
                std::cout << "]\n";
            }
            if (capped) {
                std::cerr << "cqsym: step cap exceeded in at least one run\n";
                return cap;
            }
        } else if (*verify) {
            const VerifyReport rep = verify_suite(suite, max_norm, seed, samples);
            if (!rep.ok) {
                std::cout << rep.suite << " FAIL after " << rep.cases << " cases: " << rep.counterexample
                          << '\n';
                return verify_failed;
            }
            std::cout << rep.suite << " ok cases=" << rep.cases << '\n';
        }
    } catch (const CapExceeded& e) {
        std::cerr << "cqsym: step cap exceeded after " << e.steps << " divisions\n";
        return cap;
    } catch (const cqsym::ParseError& e) {
        std::cerr << "cqsym: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        std::cerr << "cqsym: " << e.what() << '\n';
        return domain;
    } catch (const std::exception& e) {
        std::cerr << "cqsym: internal error: " << e.what() << '\n';
        return 1;
    }
    return ok;
}
