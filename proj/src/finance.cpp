#include "specprice/finance.hpp"

#include <cmath>
#include <string>

#include "specprice/errors.hpp"

namespace specprice {

void FinanceParams::validate() const {
    if (!(discount_rate >= 0.0 && discount_rate < 1.0))
        throw InvariantViolation("finance.discount_rate must be in [0, 1), got " +
                                 std::to_string(discount_rate));
    if (horizon_years < 1)
        throw InvariantViolation("finance.horizon_years must be >= 1, got " +
                                 std::to_string(horizon_years));
    if (!(gross_margin >= 0.0 && gross_margin < 10.0))
        throw InvariantViolation("finance.gross_margin must be in [0, 10), got " +
                                 std::to_string(gross_margin));
    if (!(cost_decline_rate >= 0.0 && cost_decline_rate < 1.0))
        throw InvariantViolation("finance.cost_decline_rate must be in [0, 1), got " +
                                 std::to_string(cost_decline_rate));
}

void DemandSeries::validate(int horizon_years) const {
    const auto h = static_cast<std::size_t>(horizon_years);
    if (subscribers.size() != h || voice_mbytes.size() != h || data_mbytes.size() != h)
        throw InvariantViolation(
            "demand series length must equal finance.horizon_years (" +
            std::to_string(horizon_years) + "); got subscribers=" +
            std::to_string(subscribers.size()) + ", voice_mbytes=" +
            std::to_string(voice_mbytes.size()) + ", data_mbytes=" +
            std::to_string(data_mbytes.size()));
    auto check = [](const std::vector<double>& xs, const char* key) {
        for (std::size_t t = 0; t < xs.size(); ++t) {
            if (!std::isfinite(xs[t]) || xs[t] < 0.0)
                throw InvariantViolation("demand." + std::string(key) + "[" +
                                         std::to_string(t) +
                                         "] must be finite and >= 0");
        }
    };
    check(subscribers, "subscribers");
    check(voice_mbytes, "voice_mbytes");
    check(data_mbytes, "data_mbytes");
}

double npv(const CashflowSeries& flows, double rate) {
    if (!(rate >= 0.0))
        throw InvalidInput("npv: rate must be >= 0, got " + std::to_string(rate));
    double sum = 0.0;
    double factor = 1.0;  // (1+rate)^-t, year 0 undiscounted
    for (std::size_t t = 0; t < flows.size(); ++t) {
        const double amount = flows[t];
        if (!std::isfinite(amount))
            throw InvalidInput("npv: non-finite amount at year " + std::to_string(t));
        sum += amount * factor;
        factor /= 1.0 + rate;
    }
    return sum;
}

double amortize(double capex, double rate, int life_years) {
    if (!std::isfinite(capex) || capex < 0.0)
        throw InvalidInput("amortize: capex must be finite and >= 0, got " +
                           std::to_string(capex));
    if (life_years < 1)
        throw InvalidInput("amortize: life_years must be >= 1, got " +
                           std::to_string(life_years));
    if (!(rate >= 0.0))
        throw InvalidInput("amortize: rate must be >= 0, got " + std::to_string(rate));
    if (rate == 0.0) return capex / life_years;
    return capex * rate / (1.0 - std::pow(1.0 + rate, -life_years));
}

double weighted_traffic(const DemandSeries& demand, double rate) {
    if (demand.voice_mbytes.size() != demand.data_mbytes.size())
        throw InvalidInput(
            "weighted_traffic: voice and data series lengths differ (" +
            std::to_string(demand.voice_mbytes.size()) + " vs " +
            std::to_string(demand.data_mbytes.size()) + ")");
    return npv(CashflowSeries(demand.total_mbytes()), rate);
}

}  // namespace specprice
