#ifndef SPECPRICE_BUILDOUT_HPP
#define SPECPRICE_BUILDOUT_HPP

#include <cstdint>
#include <vector>

namespace specprice {

// A 3G license's population-coverage requirement and the cell densities
// used to translate it into site counts. Urban population is always covered
// before rural, at separate persons-per-cell densities.
struct CoverageObligation {
    double required_population_coverage = 1.0;  // fraction of population
    int deadline_year = 1;                      // years allowed to reach it
    double population = 0.0;                    // persons
    double urban_fraction = 0.0;                // fraction of population
    double persons_per_cell_urban = 1.0;
    double persons_per_cell_rural = 1.0;

    void validate(int horizon_years) const;  // throws InvariantViolation
};

// Per-year cell-site construction schedule. cumulative_cells is
// non-decreasing and reaches the required count at the deadline year.
// Sharing divides each cell's capital burden across carriers in the cost
// model; it never changes the cell counts themselves.
struct BuildoutPlan {
    std::vector<std::int64_t> cumulative_cells;
    std::vector<std::int64_t> new_cells;
    bool shared = false;
    int sharing_carrier_count = 1;

    std::size_t horizon() const { return cumulative_cells.size(); }
};

// Minimal number of cells covering coverage_target of the population,
// urban-first. Throws InvalidInput for a target outside [0, 1].
std::int64_t cells_required(const CoverageObligation& obligation,
                            double coverage_target);

// Linear construction: equal cells per year from year 0, reaching
// cell_count at the end of deadline_year, constant afterwards. Yearly
// counts are floored; the deadline year absorbs the rounding remainder.
BuildoutPlan linear_schedule(std::int64_t cell_count, int deadline_year,
                             int horizon_years);

// Convenience overload at the obligation's own required coverage.
BuildoutPlan linear_schedule(const CoverageObligation& obligation,
                             int horizon_years);

// carrier_count = 1 returns the plan unchanged; >= 2 marks the plan shared
// so the cost model divides per-cell capex by carrier_count.
BuildoutPlan apply_sharing(BuildoutPlan plan, int carrier_count);

}  // namespace specprice

#endif  // SPECPRICE_BUILDOUT_HPP
