#include "specprice/csv.hpp"

#include <charconv>
#include <system_error>

namespace specprice {

std::string format_number(double value) {
    char buf[64];
    auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 6);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, ptr);
}

namespace {

const char* kind_name(BoundKind kind) {
    return kind == BoundKind::floor ? "floor" : "ceiling";
}

}  // namespace

std::string emit_csv(const PriceBound& bound) {
    std::string out = "scenario,kind,usd_per_mbyte,q_weighted\n";
    out += bound.scenario_name;
    out += ',';
    out += kind_name(bound.kind);
    out += ',';
    out += format_number(bound.usd_per_mbyte);
    out += ',';
    out += format_number(bound.q_weighted);
    out += '\n';
    return out;
}

std::string emit_csv(const CostBreakdown& breakdown,
                     const std::string& scenario_name) {
    std::string out = "scenario,component,npv_musd,share\n";
    auto row = [&](const char* component, double npv_value, double share) {
        out += scenario_name;
        out += ',';
        out += component;
        out += ',';
        out += format_number(npv_value);
        out += ',';
        out += format_number(share);
        out += '\n';
    };
    row("infrastructure", breakdown.infrastructure_npv, breakdown.infrastructure_share);
    row("operating", breakdown.operating_npv, breakdown.operating_share);
    row("license", breakdown.license_npv, breakdown.license_share);
    return out;
}

std::string emit_csv(const BreakEvenResult& result,
                     const std::string& scenario_name) {
    std::string out =
        "scenario,q_star_mil_mbytes,data_multiplier,price_at_crossing_usd_per_mbyte\n";
    out += scenario_name;
    out += ',';
    out += format_number(result.q_star_mil_mbytes);
    out += ',';
    out += format_number(result.data_multiplier);
    out += ',';
    out += format_number(result.price_at_crossing);
    out += '\n';
    return out;
}

std::string emit_csv(const CapacityReport& report) {
    std::string out = "scenario,year,sellable_mil_mbytes,demand_mil_mbytes,feasible\n";
    for (const auto& y : report.years) {
        out += report.scenario_name;
        out += ',';
        out += std::to_string(y.year);
        out += ',';
        out += format_number(y.sellable_mil_mbytes);
        out += ',';
        out += format_number(y.demand_mil_mbytes);
        out += ',';
        out += y.feasible ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string emit_csv(const SweepResult& result) {
    std::string out = "scenario,parameter,value";
    const bool has_floor = result.outputs.count(SweepOutput::floor) > 0;
    const bool has_ceiling = result.outputs.count(SweepOutput::ceiling) > 0;
    const bool has_break_even = result.outputs.count(SweepOutput::break_even) > 0;
    const bool has_breakdown = result.outputs.count(SweepOutput::breakdown) > 0;
    if (has_floor) out += ",floor_usd_per_mbyte";
    if (has_ceiling) out += ",ceiling_usd_per_mbyte";
    if (has_break_even) out += ",break_even_q_mil_mbytes";
    if (has_breakdown)
        out += ",infrastructure_share,operating_share,license_share";
    out += '\n';

    auto cell = [&](const std::optional<double>& v) {
        out += ',';
        if (v) out += format_number(*v);
    };
    for (const auto& row : result.rows) {
        out += result.scenario_name;
        out += ',';
        out += result.parameter_path;
        out += ',';
        out += format_number(row.value);
        if (has_floor) cell(row.floor);
        if (has_ceiling) cell(row.ceiling);
        if (has_break_even) cell(row.break_even_q);
        if (has_breakdown) {
            if (row.breakdown) {
                out += ',';
                out += format_number(row.breakdown->infrastructure_share);
                out += ',';
                out += format_number(row.breakdown->operating_share);
                out += ',';
                out += format_number(row.breakdown->license_share);
            } else {
                out += ",,,";
            }
        }
        out += '\n';
    }
    return out;
}

std::string emit_csv(const CompareResult& result) {
    std::string out = "multiplier,floor_base_usd_per_mbyte,floor_alt_usd_per_mbyte,abs_gap\n";
    for (const auto& p : result.points) {
        out += format_number(p.multiplier);
        out += ',';
        out += format_number(p.floor_base);
        out += ',';
        out += format_number(p.floor_alt);
        out += ',';
        out += format_number(p.abs_gap);
        out += '\n';
    }
    out += "mean,,,";
    out += format_number(result.mean_abs_gap);
    out += '\n';
    return out;
}

}  // namespace specprice
