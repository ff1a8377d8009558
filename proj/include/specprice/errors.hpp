#ifndef SPECPRICE_ERRORS_HPP
#define SPECPRICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace specprice {

// Error taxonomy. Validation errors (bad inputs, files, schemas) map to CLI
// exit code 1; model errors (a scenario the model cannot price) map to 2.
enum class ErrorKind {
    invalid_input,
    parse_error,
    schema_violation,
    invariant_violation,
    invalid_sweep_spec,
    degenerate_demand,
    degenerate_scenario,
    no_break_even,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    const char* kind_name() const {
        switch (kind_) {
        case ErrorKind::invalid_input: return "invalid-input";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::schema_violation: return "schema-violation";
        case ErrorKind::invariant_violation: return "invariant-violation";
        case ErrorKind::invalid_sweep_spec: return "invalid-sweep-spec";
        case ErrorKind::degenerate_demand: return "degenerate-demand";
        case ErrorKind::degenerate_scenario: return "degenerate-scenario";
        case ErrorKind::no_break_even: return "no-break-even";
        }
        return "error";
    }

    bool is_model_error() const {
        return kind_ == ErrorKind::degenerate_demand ||
               kind_ == ErrorKind::degenerate_scenario ||
               kind_ == ErrorKind::no_break_even;
    }

private:
    ErrorKind kind_;
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& m) : Error(ErrorKind::invalid_input, m) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(ErrorKind::parse_error, m) {}
};
struct SchemaViolation : Error {
    explicit SchemaViolation(const std::string& m) : Error(ErrorKind::schema_violation, m) {}
};
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& m) : Error(ErrorKind::invariant_violation, m) {}
};
struct InvalidSweepSpec : Error {
    explicit InvalidSweepSpec(const std::string& m) : Error(ErrorKind::invalid_sweep_spec, m) {}
};
struct DegenerateDemand : Error {
    explicit DegenerateDemand(const std::string& m) : Error(ErrorKind::degenerate_demand, m) {}
};
struct DegenerateScenario : Error {
    explicit DegenerateScenario(const std::string& m) : Error(ErrorKind::degenerate_scenario, m) {}
};
struct NoBreakEven : Error {
    explicit NoBreakEven(const std::string& m) : Error(ErrorKind::no_break_even, m) {}
};

}  // namespace specprice

#endif  // SPECPRICE_ERRORS_HPP
