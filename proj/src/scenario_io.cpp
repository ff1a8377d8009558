#include "specprice/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "specprice/errors.hpp"

namespace specprice {

namespace {

using nlohmann::json;

// Strict object reader: every key must be either declared or a
// "<declared>_provenance" string annotation.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path)
        : node_(node), path_(std::move(path)) {
        if (!node_.is_object())
            throw SchemaViolation("'" + path_ + "' must be a JSON object");
    }

    const json& require(const std::string& key) {
        declared_.push_back(key);
        auto it = node_.find(key);
        if (it == node_.end())
            throw SchemaViolation("missing required key '" + qualify(key) + "'");
        return *it;
    }

    double number(const std::string& key) {
        const json& v = require(key);
        if (!v.is_number())
            throw SchemaViolation("'" + qualify(key) + "' must be a number");
        return v.get<double>();
    }

    int integer(const std::string& key) {
        const json& v = require(key);
        if (!v.is_number_integer())
            throw SchemaViolation("'" + qualify(key) + "' must be an integer");
        return v.get<int>();
    }

    std::string text(const std::string& key) {
        const json& v = require(key);
        if (!v.is_string())
            throw SchemaViolation("'" + qualify(key) + "' must be a string");
        return v.get<std::string>();
    }

    std::vector<double> number_array(const std::string& key) {
        const json& v = require(key);
        if (!v.is_array())
            throw SchemaViolation("'" + qualify(key) + "' must be an array of numbers");
        std::vector<double> out;
        out.reserve(v.size());
        for (const auto& item : v) {
            if (!item.is_number())
                throw SchemaViolation("'" + qualify(key) +
                                      "' must contain only numbers");
            out.push_back(item.get<double>());
        }
        return out;
    }

    ObjectReader object(const std::string& key) {
        return ObjectReader(require(key), qualify(key));
    }

    // Call once after all declared keys were read.
    void reject_unknown_keys() const {
        for (auto it = node_.begin(); it != node_.end(); ++it) {
            const std::string& key = it.key();
            if (is_declared(key)) continue;
            if (is_provenance_of_declared(key)) {
                if (!it.value().is_string())
                    throw SchemaViolation("'" + qualify(key) + "' must be a string");
                continue;
            }
            throw SchemaViolation("unknown key '" + qualify(key) + "'");
        }
    }

private:
    std::string qualify(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    bool is_declared(const std::string& key) const {
        for (const auto& d : declared_)
            if (d == key) return true;
        return false;
    }

    bool is_provenance_of_declared(const std::string& key) const {
        static const std::string suffix = "_provenance";
        if (key.size() <= suffix.size()) return false;
        if (key.compare(key.size() - suffix.size(), suffix.size(), suffix) != 0)
            return false;
        return is_declared(key.substr(0, key.size() - suffix.size()));
    }

    const json& node_;
    std::string path_;
    std::vector<std::string> declared_;
};

ScenarioKind parse_kind(const std::string& text, const std::string& key) {
    if (text == "base") return ScenarioKind::base;
    if (text == "most_likely") return ScenarioKind::most_likely;
    throw SchemaViolation("'" + key + "' must be \"base\" or \"most_likely\", got \"" +
                          text + "\"");
}

MnoParams read_mno(ObjectReader mno) {
    MnoParams params;
    params.retail_price_voice_per_mbyte = mno.number("retail_price_voice_per_mbyte");
    params.retail_price_data_per_mbyte = mno.number("retail_price_data_per_mbyte");
    params.cost_per_subscriber_per_year = mno.number("cost_per_subscriber_per_year");
    params.gross_margin = mno.number("gross_margin");
    mno.reject_unknown_keys();
    return params;
}

LoadedScenario read_scenario(const json& doc, const std::string& origin) {
    ObjectReader root(doc, "");
    LoadedScenario loaded;
    Scenario& s = loaded.scenario;

    s.name = root.text("name");
    if (s.name.empty())
        throw SchemaViolation("'name' must be a non-empty string");
    s.kind = parse_kind(root.text("scenario_kind"), "scenario_kind");

    {
        ObjectReader finance = root.object("finance");
        s.finance.discount_rate = finance.number("discount_rate");
        s.finance.horizon_years = finance.integer("horizon_years");
        s.finance.gross_margin = finance.number("gross_margin");
        s.finance.cost_decline_rate = finance.number("cost_decline_rate");
        finance.reject_unknown_keys();
    }
    {
        ObjectReader obligation = root.object("obligation");
        s.obligation.required_population_coverage =
            obligation.number("required_population_coverage");
        s.obligation.deadline_year = obligation.integer("deadline_year");
        s.obligation.population = obligation.number("population");
        s.obligation.urban_fraction = obligation.number("urban_fraction");
        s.obligation.persons_per_cell_urban = obligation.number("persons_per_cell_urban");
        s.obligation.persons_per_cell_rural = obligation.number("persons_per_cell_rural");
        obligation.reject_unknown_keys();
    }
    {
        ObjectReader demand = root.object("demand");
        s.demand.subscribers = demand.number_array("subscribers");
        s.demand.voice_mbytes = demand.number_array("voice_mbytes");
        s.demand.data_mbytes = demand.number_array("data_mbytes");
        demand.reject_unknown_keys();
    }
    {
        ObjectReader capacity = root.object("capacity");
        s.capacity.spectrum_mhz = capacity.number("spectrum_mhz");
        s.capacity.capacity_constant = capacity.number("capacity_constant");
        s.capacity.utilization = capacity.number("utilization");
        capacity.reject_unknown_keys();
    }
    {
        ObjectReader costs = root.object("unit_costs");
        s.costs.cell_site_capex = costs.number("cell_site_capex");
        s.costs.core_network_capex_per_subscriber =
            costs.number("core_network_capex_per_subscriber");
        s.costs.cell_opex_per_year = costs.number("cell_opex_per_year");
        s.costs.opex_per_subscriber_per_year =
            costs.number("opex_per_subscriber_per_year");
        s.costs.equipment_life_years = costs.integer("equipment_life_years");
        costs.reject_unknown_keys();
    }
    s.license_fee_musd = root.number("license_fee_musd");
    s.sharing_carrier_count = root.integer("sharing_carrier_count");
    loaded.mno = read_mno(root.object("mno"));
    root.reject_unknown_keys();

    try {
        s.validate();
        loaded.mno.validate();
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(std::string(e.what()) + " (in " + origin + ")");
    }
    return loaded;
}

json parse_json(const std::string& text, const std::string& origin) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ParseError("failed to parse JSON from " + origin);
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidInput("cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

LoadedScenario parse_scenario(const std::string& json_text,
                              const std::string& origin) {
    return read_scenario(parse_json(json_text, origin), origin);
}

LoadedScenario load_scenario(const std::string& path) {
    return parse_scenario(read_file(path), "'" + path + "'");
}

MnoParams load_mno(const std::string& path_or_inline) {
    std::string text;
    std::string origin;
    if (!path_or_inline.empty() && path_or_inline.front() == '{') {
        text = path_or_inline;
        origin = "inline mno JSON";
    } else {
        std::ifstream in(path_or_inline, std::ios::binary);
        if (!in)
            throw InvalidInput("cannot open mno file '" + path_or_inline + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
        origin = "'" + path_or_inline + "'";
    }
    MnoParams params = read_mno(ObjectReader(parse_json(text, origin), "mno"));
    try {
        params.validate();
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(std::string(e.what()) + " (in " + origin + ")");
    }
    return params;
}

std::string emit_scenario_json(const Scenario& s, const MnoParams& mno) {
    json doc;
    doc["name"] = s.name;
    doc["scenario_kind"] = s.kind == ScenarioKind::base ? "base" : "most_likely";
    doc["finance"] = {
        {"discount_rate", s.finance.discount_rate},
        {"horizon_years", s.finance.horizon_years},
        {"gross_margin", s.finance.gross_margin},
        {"cost_decline_rate", s.finance.cost_decline_rate},
    };
    doc["obligation"] = {
        {"required_population_coverage", s.obligation.required_population_coverage},
        {"deadline_year", s.obligation.deadline_year},
        {"population", s.obligation.population},
        {"urban_fraction", s.obligation.urban_fraction},
        {"persons_per_cell_urban", s.obligation.persons_per_cell_urban},
        {"persons_per_cell_rural", s.obligation.persons_per_cell_rural},
    };
    doc["demand"] = {
        {"subscribers", s.demand.subscribers},
        {"voice_mbytes", s.demand.voice_mbytes},
        {"data_mbytes", s.demand.data_mbytes},
    };
    doc["capacity"] = {
        {"spectrum_mhz", s.capacity.spectrum_mhz},
        {"capacity_constant", s.capacity.capacity_constant},
        {"utilization", s.capacity.utilization},
    };
    doc["unit_costs"] = {
        {"cell_site_capex", s.costs.cell_site_capex},
        {"core_network_capex_per_subscriber", s.costs.core_network_capex_per_subscriber},
        {"cell_opex_per_year", s.costs.cell_opex_per_year},
        {"opex_per_subscriber_per_year", s.costs.opex_per_subscriber_per_year},
        {"equipment_life_years", s.costs.equipment_life_years},
    };
    doc["license_fee_musd"] = s.license_fee_musd;
    doc["sharing_carrier_count"] = s.sharing_carrier_count;
    doc["mno"] = {
        {"retail_price_voice_per_mbyte", mno.retail_price_voice_per_mbyte},
        {"retail_price_data_per_mbyte", mno.retail_price_data_per_mbyte},
        {"cost_per_subscriber_per_year", mno.cost_per_subscriber_per_year},
        {"gross_margin", mno.gross_margin},
    };
    return doc.dump(2) + "\n";
}

}  // namespace specprice
