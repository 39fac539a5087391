#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "simplexcert/construction.hpp"
#include "simplexcert/sweep.hpp"

namespace simplexcert {

std::string_view tool_version();

// Rationals travel as {"num": "...", "den": "..."} so big integers survive.
nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& j);

// The machine-readable verify document. from_json(to_json(r)) reproduces r,
// and to_json(from_json(doc)) reproduces doc.
nlohmann::json report_to_json(const CertificationReport& report);
CertificationReport report_from_json(const nlohmann::json& doc);

// Human-readable verify summary.
std::string report_to_text(const CertificationReport& report);

// "%.3e", for human-readable output.
std::string format_error(double value);
// Shortest decimal string that reads back to the same double (JSON
// oracle_abs_err field), and its inverse.
std::string format_decimal(double value);
double parse_decimal(std::string_view text);
// Six decimals, as printed in the table.
std::string format_degrees(double degrees);
double degrees_from_cosine(const Rational& cosine);

enum class TableFormat { csv, text };

// One row per n in [from, to]: exact dihedral and central cosines and their
// angles in degrees. Requires 2 <= from <= to.
std::string format_table(std::size_t from, std::size_t to, TableFormat format);

// Exact coordinates of A..H, the line parameters of H and the circle.
std::string trace_to_text(const ConstructionScene& scene);

// Plane cross-section drawing: the eight labeled points, segments
// AB, CF, AE, BD, GF, EF, CG and the circle centered at B.
std::string render_scene_svg(const ConstructionScene& scene);

} // namespace simplexcert
