#include "cqsym/costmodel.hpp"

#include <cmath>
#include <sstream>

#include "cqsym/int.hpp"

namespace cqsym {

CostCounters& CostCounters::operator+=(const CostCounters& other) {
    mul_cost += other.mul_cost;
    add_cost += other.add_cost;
    div_steps += other.div_steps;
    ramified_removals += other.ramified_removals;
    remainder_volume += other.remainder_volume;
    return *this;
}

void charge_mul(CostCounters* c, std::uint64_t m, std::uint64_t n) {
    if (c == nullptr) return;
    c->mul_cost += model_mul_cost(m == 0 ? 1 : m, n == 0 ? 1 : n);
}

void charge_add(CostCounters* c, std::uint64_t n) {
    if (c == nullptr) return;
    c->add_cost += n == 0 ? 1 : n;
}

CostSnapshot snapshot(const CostCounters& c) {
    return CostSnapshot{c.mul_cost, c.add_cost, c.div_steps, c.ramified_removals, c.remainder_volume};
}

std::string CostSnapshot::csv_header() {
    return "mul_cost,add_cost,div_steps,ramified_removals,remainder_volume";
}

std::string CostSnapshot::to_csv() const {
    std::ostringstream os;
    os << mul_cost << ',' << add_cost << ',' << div_steps << ',' << ramified_removals << ','
       << remainder_volume;
    return os.str();
}

std::string CostSnapshot::to_json() const {
    std::ostringstream os;
    os << "{\"mul_cost\":" << mul_cost << ",\"add_cost\":" << add_cost
       << ",\"div_steps\":" << div_steps << ",\"ramified_removals\":" << ramified_removals
       << ",\"remainder_volume\":" << remainder_volume << '}';
    return os.str();
}

double fit_exponent(std::span<const FitPoint> points) {
    if (points.size() < 4) throw FitError("fit_exponent: need at least 4 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].size > 0) || !(points[i].cost > 0))
            throw FitError("fit_exponent: sizes and costs must be positive");
        if (i > 0 && !(points[i].size > points[i - 1].size))
            throw FitError("fit_exponent: sizes must be strictly increasing");
    }
    double sx = 0, sy = 0;
    for (const auto& p : points) {
        sx += std::log(p.size);
        sy += std::log(p.cost);
    }
    const double n = static_cast<double>(points.size());
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (const auto& p : points) {
        const double dx = std::log(p.size) - mx;
        sxy += dx * (std::log(p.cost) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace cqsym
