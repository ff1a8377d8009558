#include "specprice/buildout.hpp"

#include <cmath>
#include <string>

#include "specprice/errors.hpp"

namespace specprice {

void CoverageObligation::validate(int horizon_years) const {
    if (!(required_population_coverage > 0.0 && required_population_coverage <= 1.0))
        throw InvariantViolation(
            "obligation.required_population_coverage must be in (0, 1], got " +
            std::to_string(required_population_coverage));
    if (deadline_year < 1 || deadline_year > horizon_years)
        throw InvariantViolation(
            "obligation.deadline_year must be in [1, horizon_years], got " +
            std::to_string(deadline_year));
    if (!(population >= 0.0) || !std::isfinite(population))
        throw InvariantViolation("obligation.population must be finite and >= 0");
    if (!(urban_fraction >= 0.0 && urban_fraction <= 1.0))
        throw InvariantViolation("obligation.urban_fraction must be in [0, 1], got " +
                                 std::to_string(urban_fraction));
    if (!(persons_per_cell_urban > 0.0))
        throw InvariantViolation("obligation.persons_per_cell_urban must be > 0");
    if (!(persons_per_cell_rural > 0.0))
        throw InvariantViolation("obligation.persons_per_cell_rural must be > 0");
}

std::int64_t cells_required(const CoverageObligation& obligation,
                            double coverage_target) {
    if (!(coverage_target >= 0.0 && coverage_target <= 1.0))
        throw InvalidInput("cells_required: coverage_target must be in [0, 1], got " +
                           std::to_string(coverage_target));
    const double covered = coverage_target * obligation.population;
    if (covered <= 0.0) return 0;

    const double urban_pop = obligation.urban_fraction * obligation.population;
    // Urban areas first, rural remainder at its own density. A partially
    // filled urban cell is not reused for rural coverage.
    if (covered <= urban_pop)
        return static_cast<std::int64_t>(
            std::ceil(covered / obligation.persons_per_cell_urban));
    const auto urban_cells = static_cast<std::int64_t>(
        std::ceil(urban_pop / obligation.persons_per_cell_urban));
    const auto rural_cells = static_cast<std::int64_t>(
        std::ceil((covered - urban_pop) / obligation.persons_per_cell_rural));
    return urban_cells + rural_cells;
}

BuildoutPlan linear_schedule(std::int64_t cell_count, int deadline_year,
                             int horizon_years) {
    if (cell_count < 0)
        throw InvalidInput("linear_schedule: cell_count must be >= 0");
    if (deadline_year < 1)
        throw InvalidInput("linear_schedule: deadline_year must be >= 1, got " +
                           std::to_string(deadline_year));
    if (deadline_year > horizon_years)
        throw InvalidInput("linear_schedule: deadline_year (" +
                           std::to_string(deadline_year) +
                           ") exceeds horizon_years (" +
                           std::to_string(horizon_years) + ")");

    BuildoutPlan plan;
    plan.cumulative_cells.resize(horizon_years);
    plan.new_cells.resize(horizon_years);
    for (int t = 0; t < horizon_years; ++t) {
        // Floor each year; the deadline year absorbs the remainder.
        const std::int64_t ideal =
            t + 1 >= deadline_year
                ? cell_count
                : cell_count * static_cast<std::int64_t>(t + 1) / deadline_year;
        plan.cumulative_cells[t] = ideal;
        plan.new_cells[t] = ideal - (t > 0 ? plan.cumulative_cells[t - 1] : 0);
    }
    return plan;
}

BuildoutPlan linear_schedule(const CoverageObligation& obligation,
                             int horizon_years) {
    obligation.validate(horizon_years);
    return linear_schedule(
        cells_required(obligation, obligation.required_population_coverage),
        obligation.deadline_year, horizon_years);
}

BuildoutPlan apply_sharing(BuildoutPlan plan, int carrier_count) {
    if (carrier_count < 1)
        throw InvalidInput("apply_sharing: carrier_count must be >= 1, got " +
                           std::to_string(carrier_count));
    if (carrier_count == 1) return plan;
    plan.shared = true;
    plan.sharing_carrier_count = carrier_count;
    return plan;
}

}  // namespace specprice
