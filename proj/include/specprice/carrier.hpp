#ifndef SPECPRICE_CARRIER_HPP
#define SPECPRICE_CARRIER_HPP

#include <string>
#include <vector>

#include "specprice/buildout.hpp"
#include "specprice/demand.hpp"
#include "specprice/finance.hpp"

namespace specprice {

// base: coverage as required by the regulator, sites built alone, nominal
// system capacity. most_likely: all urban areas covered regardless of the
// requirement, sites shared, interference-reduced capacity.
enum class ScenarioKind { base, most_likely };

struct CapacityParams {
    double spectrum_mhz = 0.0;       // MHz held
    double capacity_constant = 0.0;  // Mbps per MHz per cell
    double utilization = 1.0;        // sellable fraction of theoretical capacity

    void validate() const;
};

// Unit costs at year 0, in millions of USD. Equipment prices decline at
// FinanceParams::cost_decline_rate per year; opex rates do not.
struct UnitCosts {
    double cell_site_capex = 0.0;                  // per cell
    double core_network_capex_per_subscriber = 0.0;
    double cell_opex_per_year = 0.0;               // per cell
    double opex_per_subscriber_per_year = 0.0;
    int equipment_life_years = 10;

    void validate() const;
};

// One country-or-aggregate case: everything the price equation needs.
struct Scenario {
    std::string name;
    ScenarioKind kind = ScenarioKind::base;
    FinanceParams finance;
    CoverageObligation obligation;
    DemandSeries demand;
    CapacityParams capacity;
    UnitCosts costs;
    double license_fee_musd = 0.0;  // year-0 auction payment
    int sharing_carrier_count = 1;  // 1 = sites built alone

    void validate() const;

    // most_likely covers at least all urban areas; base covers exactly the
    // regulatory requirement.
    double coverage_target() const;
};

struct CostBreakdown {
    double infrastructure_npv = 0.0;
    double operating_npv = 0.0;
    double license_npv = 0.0;
    double infrastructure_share = 0.0;
    double operating_share = 0.0;
    double license_share = 0.0;

    double total_npv() const {
        return infrastructure_npv + operating_npv + license_npv;
    }
};

enum class BoundKind { floor, ceiling };

// A price bound in USD per Mbyte together with the discounted traffic that
// produced it.
struct PriceBound {
    BoundKind kind = BoundKind::floor;
    double usd_per_mbyte = 0.0;
    double q_weighted = 0.0;  // millions of Mbytes, discounted
    std::string scenario_name;
};

struct CapacityYear {
    int year = 0;
    double sellable_mil_mbytes = 0.0;
    double demand_mil_mbytes = 0.0;
    bool feasible = true;
};

struct CapacityReport {
    std::string scenario_name;
    std::vector<CapacityYear> years;

    bool all_feasible() const {
        for (const auto& y : years)
            if (!y.feasible) return false;
        return true;
    }
};

inline constexpr double kSecondsPerYear = 365.0 * 24.0 * 3600.0;

// The buildout plan a scenario implies: linear schedule to its coverage
// target, shared when sharing_carrier_count >= 2.
BuildoutPlan scenario_plan(const Scenario& scenario);

// Amortized yearly infrastructure payments. New cells and new-subscriber
// core equipment are bought at unit cost * (1-decline)^t; shared plans
// divide the cell purchase by the carrier count; each purchase becomes a
// level payment over min(equipment_life, remaining horizon) starting in
// the purchase year.
CashflowSeries infrastructure_cost(const Scenario& scenario,
                                   const BuildoutPlan& plan);

// Yearly operating expense: cumulative cells * cell opex + subscribers *
// per-subscriber opex. No cost decline and no sharing applies to opex.
CashflowSeries operating_expense(const Scenario& scenario,
                                 const BuildoutPlan& plan);

// The carrier cost floor: minimum USD per Mbyte recouping all costs at the
// target gross margin,
//   P = (1 + gross_margin) * [npv(infra) + npv(opex) + license] / Q.
// Throws DegenerateDemand when discounted traffic is not positive.
PriceBound floor_price(const Scenario& scenario);

// NPV of the three cost components and their shares of the total.
// Throws DegenerateScenario when the total cost is not positive.
CostBreakdown cost_breakdown(const Scenario& scenario);

// Per-year sellable traffic against demand. Sellable Mbytes =
// cells * MHz * capacity_constant * utilization, converted from Mbps-years.
CapacityReport capacity_check(const Scenario& scenario,
                              const BuildoutPlan& plan);
CapacityReport capacity_check(const Scenario& scenario);

}  // namespace specprice

#endif  // SPECPRICE_CARRIER_HPP
