#include "specprice/carrier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specprice/errors.hpp"

namespace specprice {

void CapacityParams::validate() const {
    if (!(spectrum_mhz > 0.0))
        throw InvariantViolation("capacity.spectrum_mhz must be > 0, got " +
                                 std::to_string(spectrum_mhz));
    if (!(capacity_constant > 0.0))
        throw InvariantViolation("capacity.capacity_constant must be > 0, got " +
                                 std::to_string(capacity_constant));
    if (!(utilization > 0.0 && utilization <= 1.0))
        throw InvariantViolation("capacity.utilization must be in (0, 1], got " +
                                 std::to_string(utilization));
}

void UnitCosts::validate() const {
    auto nonneg = [](double v, const char* key) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvariantViolation("unit_costs." + std::string(key) +
                                     " must be finite and >= 0, got " +
                                     std::to_string(v));
    };
    nonneg(cell_site_capex, "cell_site_capex");
    nonneg(core_network_capex_per_subscriber, "core_network_capex_per_subscriber");
    nonneg(cell_opex_per_year, "cell_opex_per_year");
    nonneg(opex_per_subscriber_per_year, "opex_per_subscriber_per_year");
    if (equipment_life_years < 1)
        throw InvariantViolation("unit_costs.equipment_life_years must be >= 1, got " +
                                 std::to_string(equipment_life_years));
}

void Scenario::validate() const {
    finance.validate();
    obligation.validate(finance.horizon_years);
    demand.validate(finance.horizon_years);
    capacity.validate();
    costs.validate();
    if (!std::isfinite(license_fee_musd) || license_fee_musd < 0.0)
        throw InvariantViolation("license_fee_musd must be finite and >= 0, got " +
                                 std::to_string(license_fee_musd));
    if (sharing_carrier_count < 1)
        throw InvariantViolation("sharing_carrier_count must be >= 1, got " +
                                 std::to_string(sharing_carrier_count));
}

double Scenario::coverage_target() const {
    if (kind == ScenarioKind::most_likely)
        return std::max(obligation.required_population_coverage,
                        obligation.urban_fraction);
    return obligation.required_population_coverage;
}

BuildoutPlan scenario_plan(const Scenario& scenario) {
    auto plan = linear_schedule(cells_required(scenario.obligation,
                                               scenario.coverage_target()),
                                scenario.obligation.deadline_year,
                                scenario.finance.horizon_years);
    return apply_sharing(std::move(plan), scenario.sharing_carrier_count);
}

namespace {

void check_plan_horizon(const Scenario& scenario, const BuildoutPlan& plan,
                        const char* op) {
    if (plan.horizon() != static_cast<std::size_t>(scenario.finance.horizon_years))
        throw InvalidInput(std::string(op) + ": plan horizon (" +
                           std::to_string(plan.horizon()) +
                           ") does not match scenario horizon (" +
                           std::to_string(scenario.finance.horizon_years) + ")");
}

}  // namespace

CashflowSeries infrastructure_cost(const Scenario& scenario,
                                   const BuildoutPlan& plan) {
    check_plan_horizon(scenario, plan, "infrastructure_cost");
    const int horizon = scenario.finance.horizon_years;
    const double rate = scenario.finance.discount_rate;
    const double decline = scenario.finance.cost_decline_rate;
    const auto& costs = scenario.costs;
    const auto& subs = scenario.demand.subscribers;

    CashflowSeries payments(static_cast<std::size_t>(horizon), 0.0);
    for (int t = 0; t < horizon; ++t) {
        const double price_factor = std::pow(1.0 - decline, t);

        double cell_purchase = static_cast<double>(plan.new_cells[t]) *
                               costs.cell_site_capex * price_factor;
        if (plan.shared) cell_purchase /= plan.sharing_carrier_count;

        const double prev = t > 0 ? subs[t - 1] : 0.0;
        const double subs_added = std::max(0.0, subs[t] - prev);
        const double core_purchase = subs_added *
                                     costs.core_network_capex_per_subscriber *
                                     price_factor;

        const double purchase = cell_purchase + core_purchase;
        if (purchase <= 0.0) continue;

        const int life = std::min(costs.equipment_life_years, horizon - t);
        const double payment = amortize(purchase, rate, life);
        for (int s = t; s < t + life; ++s) payments[s] += payment;
    }
    return payments;
}

CashflowSeries operating_expense(const Scenario& scenario,
                                 const BuildoutPlan& plan) {
    check_plan_horizon(scenario, plan, "operating_expense");
    const int horizon = scenario.finance.horizon_years;
    CashflowSeries expense(static_cast<std::size_t>(horizon), 0.0);
    for (int t = 0; t < horizon; ++t) {
        expense[t] = static_cast<double>(plan.cumulative_cells[t]) *
                         scenario.costs.cell_opex_per_year +
                     scenario.demand.subscribers[t] *
                         scenario.costs.opex_per_subscriber_per_year;
    }
    return expense;
}

PriceBound floor_price(const Scenario& scenario) {
    scenario.validate();
    const double q = weighted_traffic(scenario.demand, scenario.finance.discount_rate);
    if (!(q > 0.0))
        throw DegenerateDemand("floor_price: discounted traffic is zero for scenario '" +
                               scenario.name + "'");
    const auto plan = scenario_plan(scenario);
    const double rate = scenario.finance.discount_rate;
    const double total = npv(infrastructure_cost(scenario, plan), rate) +
                         npv(operating_expense(scenario, plan), rate) +
                         scenario.license_fee_musd;
    PriceBound bound;
    bound.kind = BoundKind::floor;
    bound.usd_per_mbyte = (1.0 + scenario.finance.gross_margin) * total / q;
    bound.q_weighted = q;
    bound.scenario_name = scenario.name;
    return bound;
}

CostBreakdown cost_breakdown(const Scenario& scenario) {
    scenario.validate();
    const auto plan = scenario_plan(scenario);
    const double rate = scenario.finance.discount_rate;
    CostBreakdown b;
    b.infrastructure_npv = npv(infrastructure_cost(scenario, plan), rate);
    b.operating_npv = npv(operating_expense(scenario, plan), rate);
    b.license_npv = scenario.license_fee_musd;  // single year-0 outflow
    const double total = b.total_npv();
    if (!(total > 0.0))
        throw DegenerateScenario("cost_breakdown: total cost is zero for scenario '" +
                                 scenario.name + "'");
    b.infrastructure_share = b.infrastructure_npv / total;
    b.operating_share = b.operating_npv / total;
    b.license_share = b.license_npv / total;
    return b;
}

CapacityReport capacity_check(const Scenario& scenario,
                              const BuildoutPlan& plan) {
    check_plan_horizon(scenario, plan, "capacity_check");
    // Mbps * seconds/year / 8 = Mbytes/year; divide by 1e6 for millions.
    const double mbps_to_mil_mbytes = kSecondsPerYear / 8.0 / 1e6;
    CapacityReport report;
    report.scenario_name = scenario.name;
    report.years.reserve(plan.horizon());
    for (std::size_t t = 0; t < plan.horizon(); ++t) {
        CapacityYear y;
        y.year = static_cast<int>(t);
        y.sellable_mil_mbytes = static_cast<double>(plan.cumulative_cells[t]) *
                                scenario.capacity.spectrum_mhz *
                                scenario.capacity.capacity_constant *
                                scenario.capacity.utilization * mbps_to_mil_mbytes;
        y.demand_mil_mbytes = scenario.demand.total_mbytes(t);
        y.feasible = y.demand_mil_mbytes <= y.sellable_mil_mbytes;
        report.years.push_back(y);
    }
    return report;
}

CapacityReport capacity_check(const Scenario& scenario) {
    scenario.validate();
    return capacity_check(scenario, scenario_plan(scenario));
}

}  // namespace specprice
