#ifndef SPECPRICE_CSV_HPP
#define SPECPRICE_CSV_HPP

#include <string>

#include "specprice/sensitivity.hpp"

namespace specprice {

// All CSV output is deterministic: fixed column order, header row, values
// rendered with 6 significant digits, "\n" line endings, no locale
// formatting. Identical inputs produce byte-identical text.

// 6-significant-digit, locale-independent rendering.
std::string format_number(double value);

std::string emit_csv(const PriceBound& bound);
std::string emit_csv(const CostBreakdown& breakdown,
                     const std::string& scenario_name);
std::string emit_csv(const BreakEvenResult& result,
                     const std::string& scenario_name);
std::string emit_csv(const CapacityReport& report);
std::string emit_csv(const SweepResult& result);
std::string emit_csv(const CompareResult& result);

}  // namespace specprice

#endif  // SPECPRICE_CSV_HPP
