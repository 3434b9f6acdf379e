#pragma once

#include "conf3/poly.hpp"
#include "conf3/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace conf3::report {

enum class Format { Json, Csv, Latex, Text };

// Accepts json, csv, latex, text; anything else throws.
Format parse_format(const std::string& name);

// [{"t":..,"c":..}] and [{"t":..,"s":..,"c":..}], ordered by exponent.
nlohmann::ordered_json poly1_json(const Poly1& p);
nlohmann::ordered_json poly2_json(const Poly2& p);

nlohmann::ordered_json checks_json(const std::vector<verify::Check>& checks);

// One line per check plus a summary line; failures carry their payloads.
std::string checks_text(const std::vector<verify::Check>& checks);
std::string checks_csv(const std::vector<verify::Check>& checks);
std::string checks_latex(const std::vector<verify::Check>& checks);

std::string csv_escape(const std::string& field);
std::string latex_escape(const std::string& field);

// Writes through a sibling temp file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

// write_atomic when output_path is nonempty, stdout otherwise.
void emit(const std::string& content, const std::string& output_path);

}  // namespace conf3::report
