#ifndef SPECPRICE_MNO_HPP
#define SPECPRICE_MNO_HPP

#include <optional>

#include "specprice/carrier.hpp"

namespace specprice {

// Mobile-network-operator economics: retail prices charged to subscribers
// and the operator's own (non-spectrum) cost base.
struct MnoParams {
    double retail_price_voice_per_mbyte = 0.0;  // USD per Mbyte
    double retail_price_data_per_mbyte = 0.0;   // USD per Mbyte
    double cost_per_subscriber_per_year = 0.0;  // millions of USD
    double gross_margin = 0.0;

    void validate() const;
};

inline constexpr double kBreakEvenToleranceUsd = 1e-4;  // USD per Mbyte
inline constexpr int kBreakEvenMaxIterations = 200;

// Data-traffic multiplier range scanned for the break-even point. Voice
// traffic stays at its projection; only data scales.
struct MultiplierRange {
    double lo = 0.2;
    double hi = 2.0;
};

// Maximum wholesale price per Mbyte at which serving subscribers stays
// profitable:
//   P_max = [npv(retail revenue) - (1+margin) * npv(own costs)] / Q,
// clamped at zero. Throws DegenerateDemand when Q is not positive.
PriceBound ceiling_price(const Scenario& scenario, const MnoParams& mno);

struct BreakEvenResult {
    double q_star_mil_mbytes = 0.0;   // undiscounted horizon total at crossing
    double data_multiplier = 0.0;
    double price_at_crossing = 0.0;   // USD per Mbyte, floor == ceiling here
};

// Bisection on the data multiplier until |floor - ceiling| <
// kBreakEvenToleranceUsd. When floor and ceiling already agree at the range
// minimum the minimum is returned. Throws NoBreakEven when the bounds never
// cross inside the range.
BreakEvenResult break_even_demand(const Scenario& scenario,
                                  const MnoParams& mno,
                                  MultiplierRange range = {});

struct ProfitabilityReport {
    PriceBound floor;
    PriceBound ceiling;
    double spread = 0.0;  // ceiling - floor at projected demand
    bool profitable = false;
    std::optional<BreakEvenResult> break_even;  // absent when no crossing
};

// Floor, ceiling, spread, and break-even point at the scenario's projected
// demand. A missing crossing is reported, not thrown.
ProfitabilityReport profitability_report(const Scenario& scenario,
                                         const MnoParams& mno);

}  // namespace specprice

#endif  // SPECPRICE_MNO_HPP
