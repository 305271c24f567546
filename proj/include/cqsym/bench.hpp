#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqsym/costmodel.hpp"

namespace cqsym {

// One benchmark run. Field order is the serialization order.
struct BenchRecord {
    std::string family;
    std::uint64_t n = 0;
    // lg N(alpha beta) of the input pair.
    std::uint64_t input_bits = 0;
    std::string backend;
    std::uint64_t div_steps = 0;
    std::uint64_t ramified_removals = 0;
    std::uint64_t mul_cost = 0;
    std::uint64_t remainder_volume = 0;
    bool cap_exceeded = false;

    bool operator==(const BenchRecord&) const = default;
};

// Families: xi3, xi4, step4, even3, even4. Backends: exact, newton, even.
// "auto" picks even for even3/even4 and exact otherwise.
std::string resolve_backend(const std::string& family, const std::string& backend);

BenchRecord bench_one(const std::string& family, std::uint64_t n, const std::string& backend,
                      std::uint64_t step_cap);

// Records sorted by (family, n, backend).
std::vector<BenchRecord> run_bench(const std::string& family, const std::vector<std::uint64_t>& sizes,
                                   const std::vector<std::string>& backends,
                                   std::uint64_t step_cap);

// Metric names: div_steps, ramified_removals, mul_cost, remainder_volume.
std::uint64_t metric_of(const BenchRecord& r, const std::string& metric);

// Log-log slope of a metric against n over records of one backend.
double fit_records(const std::vector<BenchRecord>& records, const std::string& metric);

std::string bench_csv_header();
std::string to_csv(const BenchRecord& r);
// Flat JSON object with the same fields and values as the CSV row.
std::string to_json(const BenchRecord& r);
BenchRecord bench_from_json(const std::string& text);
BenchRecord bench_from_csv(const std::string& line);

}  // namespace cqsym
