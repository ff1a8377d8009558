#ifndef SPECPRICE_SCENARIO_IO_HPP
#define SPECPRICE_SCENARIO_IO_HPP

#include <string>

#include "specprice/mno.hpp"

namespace specprice {

struct LoadedScenario {
    Scenario scenario;
    MnoParams mno;
};

// Reads and validates a scenario JSON file. The schema is strict: unknown
// keys are rejected; every known field may carry a "<field>_provenance"
// string sibling. Errors are distinct by kind: ParseError for bad JSON,
// SchemaViolation for missing/unknown/mistyped keys, InvariantViolation for
// out-of-range values; each names the offending key.
LoadedScenario load_scenario(const std::string& path);

// Same, from in-memory text. `origin` labels error messages.
LoadedScenario parse_scenario(const std::string& json_text,
                              const std::string& origin);

// Parses just an MNO parameter object, from a file path or an inline JSON
// object (detected by a leading '{').
MnoParams load_mno(const std::string& path_or_inline);

// Serializes a scenario back to schema-conformant JSON (without provenance
// annotations). parse_scenario(emit_scenario_json(s)) reproduces s exactly.
std::string emit_scenario_json(const Scenario& scenario, const MnoParams& mno);

}  // namespace specprice

#endif  // SPECPRICE_SCENARIO_IO_HPP
