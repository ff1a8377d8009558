// Command-line interface for the spectrum price-bound model.
//
// Subcommands: floor, ceiling, breakeven, breakdown, sweep, compare,
// capacity. Output is deterministic CSV on stdout, or a file with --out.
// Exit codes: 0 success, 1 validation/usage error, 2 model error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "specprice/csv.hpp"
#include "specprice/errors.hpp"
#include "specprice/scenario_io.hpp"

namespace {

using namespace specprice;

// Grid spec: either "lo:hi:points" (inclusive linear spacing) or a
// comma-separated list of values.
std::vector<double> parse_grid(const std::string& spec) {
    auto parse_value = [&](const std::string& text) {
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw InvalidInput("bad grid value '" + text + "' in '" + spec + "'");
        }
    };
    auto split = [](const std::string& text, char sep) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            const auto pos = text.find(sep, start);
            parts.push_back(text.substr(start, pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        return parts;
    };

    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3)
            throw InvalidInput("grid spec '" + spec + "' must be lo:hi:points");
        const double lo = parse_value(parts[0]);
        const double hi = parse_value(parts[1]);
        const double points = parse_value(parts[2]);
        if (points < 1 || points != static_cast<int>(points))
            throw InvalidInput("grid point count must be a positive integer in '" +
                               spec + "'");
        return SweepSpec::linspace(lo, hi, static_cast<int>(points));
    }
    std::vector<double> grid;
    for (const auto& part : split(spec, ','))
        grid.push_back(parse_value(part));
    return grid;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw InvalidInput("cannot open output file '" + out_path + "'");
    out << text;
}

struct CommonOptions {
    std::string scenario_path;
    std::string mno_override;
    std::string out_path = "-";
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--scenario", opts.scenario_path, "scenario JSON file")
        ->required();
    cmd->add_option("--mno", opts.mno_override,
                    "MNO parameter override: JSON file path or inline object");
    cmd->add_option("--out", opts.out_path, "output path, '-' for stdout");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv"}));
}

LoadedScenario load_inputs(const CommonOptions& opts) {
    LoadedScenario loaded = load_scenario(opts.scenario_path);
    if (!opts.mno_override.empty())
        loaded.mno = load_mno(opts.mno_override);
    return loaded;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secondary-market spectrum price bounds (USD per Mbyte)"};
    app.require_subcommand(1);

    CommonOptions floor_opts, ceiling_opts, breakeven_opts, breakdown_opts,
        sweep_opts, compare_opts, capacity_opts;
    std::string sweep_param, sweep_grid, compare_alt, compare_grid;

    add_common(app.add_subcommand("floor", "carrier cost floor"), floor_opts);
    add_common(app.add_subcommand("ceiling", "MNO willingness-to-pay ceiling"),
               ceiling_opts);
    add_common(app.add_subcommand("breakeven", "demand level where floor meets ceiling"),
               breakeven_opts);
    add_common(app.add_subcommand("breakdown", "NPV cost components and shares"),
               breakdown_opts);
    add_common(app.add_subcommand("capacity", "per-year capacity feasibility"),
               capacity_opts);

    auto* sweep_cmd = app.add_subcommand("sweep", "one-parameter sensitivity sweep");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--param", sweep_param, "dotted parameter path")->required();
    sweep_cmd->add_option("--grid", sweep_grid, "lo:hi:points or v1,v2,...")->required();

    auto* compare_cmd =
        app.add_subcommand("compare", "floor-price gap between two scenarios");
    add_common(compare_cmd, compare_opts);
    compare_cmd->add_option("--alt", compare_alt, "alternative scenario JSON file")
        ->required();
    compare_cmd->add_option("--grid", compare_grid, "demand multipliers: lo:hi:points or v1,v2,...")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (app.got_subcommand("floor")) {
            const auto loaded = load_inputs(floor_opts);
            write_output(emit_csv(floor_price(loaded.scenario)), floor_opts.out_path);
        } else if (app.got_subcommand("ceiling")) {
            const auto loaded = load_inputs(ceiling_opts);
            write_output(emit_csv(ceiling_price(loaded.scenario, loaded.mno)),
                         ceiling_opts.out_path);
        } else if (app.got_subcommand("breakeven")) {
            const auto loaded = load_inputs(breakeven_opts);
            const auto result = break_even_demand(loaded.scenario, loaded.mno);
            write_output(emit_csv(result, loaded.scenario.name),
                         breakeven_opts.out_path);
        } else if (app.got_subcommand("breakdown")) {
            const auto loaded = load_inputs(breakdown_opts);
            write_output(emit_csv(cost_breakdown(loaded.scenario), loaded.scenario.name),
                         breakdown_opts.out_path);
        } else if (app.got_subcommand("capacity")) {
            const auto loaded = load_inputs(capacity_opts);
            write_output(emit_csv(capacity_check(loaded.scenario)),
                         capacity_opts.out_path);
        } else if (app.got_subcommand("sweep")) {
            const auto loaded = load_inputs(sweep_opts);
            SweepSpec spec;
            spec.parameter_path = sweep_param;
            spec.grid = parse_grid(sweep_grid);
            spec.outputs = {SweepOutput::floor, SweepOutput::ceiling};
            write_output(emit_csv(sweep(loaded.scenario, loaded.mno, spec)),
                         sweep_opts.out_path);
        } else if (app.got_subcommand("compare")) {
            const auto loaded = load_inputs(compare_opts);
            const auto alt = load_scenario(compare_alt);
            const auto result = compare_scenarios(loaded.scenario, alt.scenario,
                                                  parse_grid(compare_grid));
            write_output(emit_csv(result), compare_opts.out_path);
        }
    } catch (const Error& e) {
        std::cerr << "error[" << e.kind_name() << "]: " << e.what() << "\n";
        return e.is_model_error() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
