#include "specprice/sensitivity.hpp"

#include <cmath>
#include <functional>
#include <utility>

#include "specprice/errors.hpp"

namespace specprice {

Scenario with_data_multiplier(const Scenario& scenario, double multiplier) {
    if (!std::isfinite(multiplier) || multiplier < 0.0)
        throw InvalidInput("data multiplier must be finite and >= 0, got " +
                           std::to_string(multiplier));
    Scenario scaled = scenario;
    for (auto& d : scaled.demand.data_mbytes) d *= multiplier;
    return scaled;
}

namespace {

using Setter = std::function<void(Scenario&, MnoParams&, double)>;

struct ParameterEntry {
    const char* path;
    Setter set;
};

int to_int(double v, const char* path) {
    const double rounded = std::llround(v);
    if (!std::isfinite(v) || std::fabs(v - rounded) > 1e-9)
        throw InvalidSweepSpec("grid value " + std::to_string(v) + " for '" +
                               path + "' is not an integer");
    return static_cast<int>(rounded);
}

const std::vector<ParameterEntry>& parameter_registry() {
    static const std::vector<ParameterEntry> registry = {
        {"finance.discount_rate",
         [](Scenario& s, MnoParams&, double v) { s.finance.discount_rate = v; }},
        {"finance.gross_margin",
         [](Scenario& s, MnoParams&, double v) { s.finance.gross_margin = v; }},
        {"finance.cost_decline_rate",
         [](Scenario& s, MnoParams&, double v) { s.finance.cost_decline_rate = v; }},
        {"obligation.required_population_coverage",
         [](Scenario& s, MnoParams&, double v) {
             s.obligation.required_population_coverage = v;
         }},
        {"obligation.urban_fraction",
         [](Scenario& s, MnoParams&, double v) { s.obligation.urban_fraction = v; }},
        {"obligation.persons_per_cell_urban",
         [](Scenario& s, MnoParams&, double v) { s.obligation.persons_per_cell_urban = v; }},
        {"obligation.persons_per_cell_rural",
         [](Scenario& s, MnoParams&, double v) { s.obligation.persons_per_cell_rural = v; }},
        {"capacity.spectrum_mhz",
         [](Scenario& s, MnoParams&, double v) { s.capacity.spectrum_mhz = v; }},
        {"capacity.capacity_constant",
         [](Scenario& s, MnoParams&, double v) { s.capacity.capacity_constant = v; }},
        {"capacity.utilization",
         [](Scenario& s, MnoParams&, double v) { s.capacity.utilization = v; }},
        {"unit_costs.cell_site_capex",
         [](Scenario& s, MnoParams&, double v) { s.costs.cell_site_capex = v; }},
        {"unit_costs.core_network_capex_per_subscriber",
         [](Scenario& s, MnoParams&, double v) {
             s.costs.core_network_capex_per_subscriber = v;
         }},
        {"unit_costs.cell_opex_per_year",
         [](Scenario& s, MnoParams&, double v) { s.costs.cell_opex_per_year = v; }},
        {"unit_costs.opex_per_subscriber_per_year",
         [](Scenario& s, MnoParams&, double v) {
             s.costs.opex_per_subscriber_per_year = v;
         }},
        {"unit_costs.equipment_life_years",
         [](Scenario& s, MnoParams&, double v) {
             s.costs.equipment_life_years = to_int(v, "unit_costs.equipment_life_years");
         }},
        {"license_fee_musd",
         [](Scenario& s, MnoParams&, double v) { s.license_fee_musd = v; }},
        {"sharing_carrier_count",
         [](Scenario& s, MnoParams&, double v) {
             s.sharing_carrier_count = to_int(v, "sharing_carrier_count");
         }},
        {"mno.retail_price_voice_per_mbyte",
         [](Scenario&, MnoParams& m, double v) { m.retail_price_voice_per_mbyte = v; }},
        {"mno.retail_price_data_per_mbyte",
         [](Scenario&, MnoParams& m, double v) { m.retail_price_data_per_mbyte = v; }},
        {"mno.cost_per_subscriber_per_year",
         [](Scenario&, MnoParams& m, double v) { m.cost_per_subscriber_per_year = v; }},
        {"mno.gross_margin",
         [](Scenario&, MnoParams& m, double v) { m.gross_margin = v; }},
    };
    return registry;
}

const ParameterEntry& resolve_parameter(const std::string& path) {
    for (const auto& entry : parameter_registry())
        if (path == entry.path) return entry;
    throw InvalidSweepSpec("unknown parameter path '" + path + "'");
}

}  // namespace

std::vector<std::string> sweep_parameter_paths() {
    std::vector<std::string> paths;
    paths.reserve(parameter_registry().size());
    for (const auto& entry : parameter_registry()) paths.emplace_back(entry.path);
    return paths;
}

void set_parameter(Scenario& scenario, MnoParams& mno, const std::string& path,
                   double value) {
    resolve_parameter(path).set(scenario, mno, value);
}

std::vector<double> SweepSpec::linspace(double lo, double hi, int points) {
    if (points < 1)
        throw InvalidSweepSpec("linspace: need at least one point");
    if (points == 1) return {lo};
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * i / (points - 1);
    return grid;
}

SweepResult sweep(const Scenario& scenario, const MnoParams& mno,
                  const SweepSpec& spec) {
    if (spec.grid.empty())
        throw InvalidSweepSpec("sweep grid must be non-empty");
    for (std::size_t i = 1; i < spec.grid.size(); ++i)
        if (!(spec.grid[i] > spec.grid[i - 1]))
            throw InvalidSweepSpec("sweep grid must be strictly increasing");
    const auto& entry = resolve_parameter(spec.parameter_path);

    SweepResult result;
    result.scenario_name = scenario.name;
    result.parameter_path = spec.parameter_path;
    result.outputs = spec.outputs;
    result.rows.reserve(spec.grid.size());

    for (double value : spec.grid) {
        Scenario point = scenario;  // each grid point works on a copy
        MnoParams point_mno = mno;
        entry.set(point, point_mno, value);

        SweepRow row;
        row.value = value;
        if (spec.outputs.count(SweepOutput::floor))
            row.floor = floor_price(point).usd_per_mbyte;
        if (spec.outputs.count(SweepOutput::ceiling))
            row.ceiling = ceiling_price(point, point_mno).usd_per_mbyte;
        if (spec.outputs.count(SweepOutput::break_even)) {
            try {
                row.break_even_q =
                    break_even_demand(point, point_mno).q_star_mil_mbytes;
            } catch (const NoBreakEven&) {
                row.break_even_q.reset();
            }
        }
        if (spec.outputs.count(SweepOutput::breakdown))
            row.breakdown = cost_breakdown(point);
        result.rows.push_back(std::move(row));
    }
    return result;
}

CompareResult compare_scenarios(const Scenario& base, const Scenario& alt,
                                const std::vector<double>& demand_grid) {
    if (demand_grid.empty())
        throw InvalidInput("compare_scenarios: demand grid must be non-empty");
    if (base.finance.horizon_years != alt.finance.horizon_years)
        throw InvalidInput("compare_scenarios: scenarios have different horizons (" +
                           std::to_string(base.finance.horizon_years) + " vs " +
                           std::to_string(alt.finance.horizon_years) + ")");

    CompareResult result;
    result.base_name = base.name;
    result.alt_name = alt.name;
    result.points.reserve(demand_grid.size());
    double gap_sum = 0.0;
    for (double multiplier : demand_grid) {
        ComparePoint point;
        point.multiplier = multiplier;
        point.floor_base =
            floor_price(with_data_multiplier(base, multiplier)).usd_per_mbyte;
        point.floor_alt =
            floor_price(with_data_multiplier(alt, multiplier)).usd_per_mbyte;
        point.abs_gap = std::fabs(point.floor_base - point.floor_alt);
        gap_sum += point.abs_gap;
        result.points.push_back(point);
    }
    result.mean_abs_gap = gap_sum / static_cast<double>(demand_grid.size());
    return result;
}

}  // namespace specprice
