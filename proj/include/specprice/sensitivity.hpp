#ifndef SPECPRICE_SENSITIVITY_HPP
#define SPECPRICE_SENSITIVITY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specprice/mno.hpp"

namespace specprice {

enum class SweepOutput { floor, ceiling, break_even, breakdown };

// One-at-a-time sweep of a scalar scenario or MNO parameter over a grid.
struct SweepSpec {
    std::string parameter_path;          // e.g. "unit_costs.opex_per_subscriber_per_year"
    std::vector<double> grid;            // non-empty, strictly increasing
    std::set<SweepOutput> outputs{SweepOutput::floor};

    static std::vector<double> linspace(double lo, double hi, int points);
};

struct SweepRow {
    double value = 0.0;
    std::optional<double> floor;
    std::optional<double> ceiling;
    std::optional<double> break_even_q;  // absent when no crossing in range
    std::optional<CostBreakdown> breakdown;
};

struct SweepResult {
    std::string scenario_name;
    std::string parameter_path;
    std::set<SweepOutput> outputs;
    std::vector<SweepRow> rows;  // ordered by grid value
};

// Evaluates each grid point on a copy of the inputs; the originals are
// never modified. Throws InvalidSweepSpec for an unresolvable parameter
// path or a bad grid.
SweepResult sweep(const Scenario& scenario, const MnoParams& mno,
                  const SweepSpec& spec);

// Dotted paths accepted by SweepSpec::parameter_path.
std::vector<std::string> sweep_parameter_paths();

// Sets one scalar parameter on a scenario/MNO pair by dotted path.
void set_parameter(Scenario& scenario, MnoParams& mno,
                   const std::string& path, double value);

struct ComparePoint {
    double multiplier = 0.0;
    double floor_base = 0.0;
    double floor_alt = 0.0;
    double abs_gap = 0.0;
};

struct CompareResult {
    std::string base_name;
    std::string alt_name;
    std::vector<ComparePoint> points;
    double mean_abs_gap = 0.0;
};

// Floor prices of two scenarios across a grid of data-traffic multipliers
// and the mean absolute gap between the two curves.
CompareResult compare_scenarios(const Scenario& base, const Scenario& alt,
                                const std::vector<double>& demand_grid);

// A copy of the scenario with data traffic scaled by `multiplier`; voice
// stays at its projection.
Scenario with_data_multiplier(const Scenario& scenario, double multiplier);

}  // namespace specprice

#endif  // SPECPRICE_SENSITIVITY_HPP
