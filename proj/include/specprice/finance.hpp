#ifndef SPECPRICE_FINANCE_HPP
#define SPECPRICE_FINANCE_HPP

#include <vector>

#include "specprice/demand.hpp"

namespace specprice {

// Financial assumptions shared by every model component.
//
// Discount convention used throughout the project: year-0 amounts are
// undiscounted, later years carry the factor (1+r)^-t. Amortized equipment
// enters yearly cost as the level payment in each remaining year of the
// horizon, starting in the purchase year.
struct FinanceParams {
    double discount_rate = 0.06;     // fraction per year
    int horizon_years = 10;          // modeled years
    double gross_margin = 0.0;       // carrier profit markup fraction
    double cost_decline_rate = 0.10; // yearly decline of equipment unit costs

    void validate() const;  // throws InvariantViolation
};

// Yearly amounts in millions of USD, index 0 = first modeled year.
// Negative entries represent outflows.
struct CashflowSeries {
    std::vector<double> amounts;

    CashflowSeries() = default;
    explicit CashflowSeries(std::vector<double> a) : amounts(std::move(a)) {}
    CashflowSeries(std::initializer_list<double> a) : amounts(a) {}
    CashflowSeries(std::size_t n, double fill) : amounts(n, fill) {}

    std::size_t size() const { return amounts.size(); }
    double& operator[](std::size_t i) { return amounts[i]; }
    double operator[](std::size_t i) const { return amounts[i]; }
};

// Net present value: sum of amounts[t] / (1+rate)^t, t zero-indexed.
// The year-0 amount is undiscounted. Throws InvalidInput on a non-finite
// amount or a negative rate.
double npv(const CashflowSeries& flows, double rate);

// Level yearly payment that repays `capex` over `life_years` payments at
// `rate`: capex * rate / (1 - (1+rate)^-life). Straight-line when rate = 0.
double amortize(double capex, double rate, int life_years);

// Discounted total traffic Q in millions of Mbytes: voice plus data per
// year, weighted with the same kernel as npv so Q is commensurate with the
// NPV cost terms it divides.
double weighted_traffic(const DemandSeries& demand, double rate);

}  // namespace specprice

#endif  // SPECPRICE_FINANCE_HPP
