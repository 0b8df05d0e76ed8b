#pragma once
// Serialization of run reports: deterministic JSON (byte-identical for
// identical inputs) and a flat CSV projection with a documented column order.

#include <string>
#include <vector>

#include "fracineq/sweep.hpp"

namespace fracineq {

// Compact single-line-per-document JSON; field order is fixed, no timing or
// host information is embedded, so identical runs serialize identically.
std::string report_to_json(const RunReport& report);

// Flat CSV of the rows array of a serialized report.  Numbers are printed
// with %.17g (round-trips doubles exactly); fields that do not apply to a
// row's kind stay empty.  Throws std::runtime_error on malformed input.
std::string report_json_to_csv(const std::string& json_text);

// The fixed CSV column order.
const std::vector<std::string>& csv_columns();

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace fracineq
