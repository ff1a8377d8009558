#ifndef SPECPRICE_TESTS_SUPPORT_HPP
#define SPECPRICE_TESTS_SUPPORT_HPP

// Shared helpers for the unit and acceptance suites: synthetic scenario
// builders, a randomized scenario generator, and a CLI process runner.

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "specprice/mno.hpp"

namespace specprice::testing {

inline std::string data_path(const std::string& name) {
    return std::string(SPECPRICE_DATA_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Flat 10-year scenario with round numbers: 500 cells over 5 years, flat
// demand of 100 mil Mbytes per year, unit costs off by default.
inline Scenario make_flat_scenario() {
    Scenario s;
    s.name = "synthetic";
    s.kind = ScenarioKind::base;
    s.finance = {0.06, 10, 0.0, 0.10};
    s.obligation = {0.5, 5, 10'000'000.0, 0.5, 10'000.0, 2'000.0};
    s.demand.subscribers.assign(10, 1e6);
    s.demand.voice_mbytes.assign(10, 50.0);
    s.demand.data_mbytes.assign(10, 50.0);
    s.capacity = {10.0, 668.0, 1.0};
    s.costs = {0.0, 0.0, 0.0, 0.0, 10};
    s.license_fee_musd = 0.0;
    s.sharing_carrier_count = 1;
    return s;
}

// Scenario whose plan has no cells at all (zero population).
inline Scenario make_cell_free_scenario() {
    Scenario s = make_flat_scenario();
    s.obligation.population = 0.0;
    return s;
}

inline MnoParams make_zero_mno() {
    return MnoParams{0.0, 0.0, 0.0, 0.0};
}

// Valid random scenario for property tests. Always has positive data
// traffic in every year and a positive license fee so prices are positive.
inline Scenario random_scenario(std::mt19937& rng) {
    auto uniform = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    auto uniform_int = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    Scenario s;
    s.name = "random";
    s.kind = uniform_int(0, 1) == 0 ? ScenarioKind::base : ScenarioKind::most_likely;
    s.finance.discount_rate = uniform(0.0, 0.15);
    s.finance.horizon_years = uniform_int(2, 12);
    s.finance.gross_margin = uniform(0.0, 0.5);
    s.finance.cost_decline_rate = uniform(0.0, 0.3);

    s.obligation.required_population_coverage = uniform(0.05, 1.0);
    s.obligation.deadline_year = uniform_int(1, s.finance.horizon_years);
    s.obligation.population = uniform(1e5, 5e6);
    s.obligation.urban_fraction = uniform(0.2, 0.9);
    s.obligation.persons_per_cell_urban = uniform(1'000.0, 20'000.0);
    s.obligation.persons_per_cell_rural = uniform(100.0, 5'000.0);

    const int h = s.finance.horizon_years;
    double subs = uniform(1e3, 1e5);
    for (int t = 0; t < h; ++t) {
        s.demand.subscribers.push_back(subs);
        subs *= uniform(1.0, 1.6);
        s.demand.voice_mbytes.push_back(uniform(0.0, 200.0));
        s.demand.data_mbytes.push_back(uniform(1.0, 500.0));
    }

    s.capacity.spectrum_mhz = uniform(5.0, 50.0);
    s.capacity.capacity_constant = uniform(100.0, 700.0);
    s.capacity.utilization = uniform(0.01, 1.0);

    s.costs.cell_site_capex = uniform(0.0, 2.0);
    s.costs.core_network_capex_per_subscriber = uniform(0.0, 1e-4);
    s.costs.cell_opex_per_year = uniform(0.0, 0.1);
    s.costs.opex_per_subscriber_per_year = uniform(0.0, 5e-4);
    s.costs.equipment_life_years = uniform_int(1, 12);

    s.license_fee_musd = uniform(1.0, 5e4);
    s.sharing_carrier_count = uniform_int(1, 4);
    return s;
}

inline bool demand_identical(const DemandSeries& a, const DemandSeries& b) {
    return a.subscribers == b.subscribers && a.voice_mbytes == b.voice_mbytes &&
           a.data_mbytes == b.data_mbytes;
}

inline bool scenarios_identical(const Scenario& a, const Scenario& b) {
    return a.name == b.name && a.kind == b.kind &&
           a.finance.discount_rate == b.finance.discount_rate &&
           a.finance.horizon_years == b.finance.horizon_years &&
           a.finance.gross_margin == b.finance.gross_margin &&
           a.finance.cost_decline_rate == b.finance.cost_decline_rate &&
           a.obligation.required_population_coverage ==
               b.obligation.required_population_coverage &&
           a.obligation.deadline_year == b.obligation.deadline_year &&
           a.obligation.population == b.obligation.population &&
           a.obligation.urban_fraction == b.obligation.urban_fraction &&
           a.obligation.persons_per_cell_urban == b.obligation.persons_per_cell_urban &&
           a.obligation.persons_per_cell_rural == b.obligation.persons_per_cell_rural &&
           demand_identical(a.demand, b.demand) &&
           a.capacity.spectrum_mhz == b.capacity.spectrum_mhz &&
           a.capacity.capacity_constant == b.capacity.capacity_constant &&
           a.capacity.utilization == b.capacity.utilization &&
           a.costs.cell_site_capex == b.costs.cell_site_capex &&
           a.costs.core_network_capex_per_subscriber ==
               b.costs.core_network_capex_per_subscriber &&
           a.costs.cell_opex_per_year == b.costs.cell_opex_per_year &&
           a.costs.opex_per_subscriber_per_year ==
               b.costs.opex_per_subscriber_per_year &&
           a.costs.equipment_life_years == b.costs.equipment_life_years &&
           a.license_fee_musd == b.license_fee_musd &&
           a.sharing_carrier_count == b.sharing_carrier_count;
}

inline bool mno_identical(const MnoParams& a, const MnoParams& b) {
    return a.retail_price_voice_per_mbyte == b.retail_price_voice_per_mbyte &&
           a.retail_price_data_per_mbyte == b.retail_price_data_per_mbyte &&
           a.cost_per_subscriber_per_year == b.cost_per_subscriber_per_year &&
           a.gross_margin == b.gross_margin;
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

#ifdef SPECPRICE_CLI_PATH
// Runs the built CLI binary with the given argument string.
inline CliResult run_cli(const std::string& args) {
    CliResult result;
    const std::string cmd = std::string(SPECPRICE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        result.output = "popen failed";
        return result;
    }
    char buffer[512];
    while (fgets(buffer, sizeof(buffer), pipe)) result.output += buffer;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}
#endif

}  // namespace specprice::testing

#endif  // SPECPRICE_TESTS_SUPPORT_HPP
