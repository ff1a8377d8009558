#include "specprice/mno.hpp"

#include <cmath>
#include <string>

#include "specprice/errors.hpp"
#include "specprice/sensitivity.hpp"

namespace specprice {

void MnoParams::validate() const {
    auto nonneg = [](double v, const char* key) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvariantViolation("mno." + std::string(key) +
                                     " must be finite and >= 0, got " +
                                     std::to_string(v));
    };
    nonneg(retail_price_voice_per_mbyte, "retail_price_voice_per_mbyte");
    nonneg(retail_price_data_per_mbyte, "retail_price_data_per_mbyte");
    nonneg(cost_per_subscriber_per_year, "cost_per_subscriber_per_year");
    if (!(gross_margin >= 0.0 && gross_margin < 10.0))
        throw InvariantViolation("mno.gross_margin must be in [0, 10), got " +
                                 std::to_string(gross_margin));
}

PriceBound ceiling_price(const Scenario& scenario, const MnoParams& mno) {
    scenario.validate();
    mno.validate();
    const double rate = scenario.finance.discount_rate;
    const double q = weighted_traffic(scenario.demand, rate);
    if (!(q > 0.0))
        throw DegenerateDemand("ceiling_price: discounted traffic is zero for scenario '" +
                               scenario.name + "'");

    const int horizon = scenario.finance.horizon_years;
    CashflowSeries revenue(static_cast<std::size_t>(horizon), 0.0);
    CashflowSeries own_costs(static_cast<std::size_t>(horizon), 0.0);
    for (int t = 0; t < horizon; ++t) {
        // USD/Mbyte times millions of Mbytes = millions of USD.
        revenue[t] = mno.retail_price_voice_per_mbyte * scenario.demand.voice_mbytes[t] +
                     mno.retail_price_data_per_mbyte * scenario.demand.data_mbytes[t];
        own_costs[t] = mno.cost_per_subscriber_per_year * scenario.demand.subscribers[t];
    }

    const double headroom =
        npv(revenue, rate) - (1.0 + mno.gross_margin) * npv(own_costs, rate);
    PriceBound bound;
    bound.kind = BoundKind::ceiling;
    bound.usd_per_mbyte = std::max(0.0, headroom / q);
    bound.q_weighted = q;
    bound.scenario_name = scenario.name;
    return bound;
}

namespace {

double bound_gap(const Scenario& scenario, const MnoParams& mno, double multiplier) {
    const Scenario scaled = with_data_multiplier(scenario, multiplier);
    return floor_price(scaled).usd_per_mbyte - ceiling_price(scaled, mno).usd_per_mbyte;
}

BreakEvenResult result_at(const Scenario& scenario, double multiplier) {
    const Scenario scaled = with_data_multiplier(scenario, multiplier);
    BreakEvenResult r;
    r.data_multiplier = multiplier;
    r.q_star_mil_mbytes = scaled.demand.total_undiscounted();
    r.price_at_crossing = floor_price(scaled).usd_per_mbyte;
    return r;
}

}  // namespace

BreakEvenResult break_even_demand(const Scenario& scenario, const MnoParams& mno,
                                  MultiplierRange range) {
    if (!(range.lo >= 0.0) || !(range.hi > range.lo))
        throw InvalidInput("break_even_demand: multiplier range must satisfy 0 <= lo < hi");

    double g_lo = bound_gap(scenario, mno, range.lo);
    // Boundary convention: when the bounds already agree at the range
    // minimum, the minimum is the break-even point.
    if (std::fabs(g_lo) <= kBreakEvenToleranceUsd)
        return result_at(scenario, range.lo);
    if (g_lo < 0.0)
        throw NoBreakEven(
            "break_even_demand: floor is already below ceiling at the range "
            "minimum (multiplier " + std::to_string(range.lo) +
            "); the crossing lies below the scanned range");

    double g_hi = bound_gap(scenario, mno, range.hi);
    if (std::fabs(g_hi) <= kBreakEvenToleranceUsd)
        return result_at(scenario, range.hi);
    if (g_hi > 0.0)
        throw NoBreakEven(
            "break_even_demand: floor exceeds ceiling across the whole range "
            "(unprofitable up to multiplier " + std::to_string(range.hi) + ")");

    double lo = range.lo;
    double hi = range.hi;
    for (int i = 0; i < kBreakEvenMaxIterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double g = bound_gap(scenario, mno, mid);
        if (std::fabs(g) < kBreakEvenToleranceUsd)
            return result_at(scenario, mid);
        if (g > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    throw NoBreakEven("break_even_demand: bisection did not converge within " +
                      std::to_string(kBreakEvenMaxIterations) + " iterations");
}

ProfitabilityReport profitability_report(const Scenario& scenario,
                                         const MnoParams& mno) {
    ProfitabilityReport report;
    report.floor = floor_price(scenario);
    report.ceiling = ceiling_price(scenario, mno);
    report.spread = report.ceiling.usd_per_mbyte - report.floor.usd_per_mbyte;
    report.profitable = report.ceiling.usd_per_mbyte >= report.floor.usd_per_mbyte;
    try {
        report.break_even = break_even_demand(scenario, mno);
    } catch (const NoBreakEven&) {
        report.break_even.reset();
    }
    return report;
}

}  // namespace specprice
