#include "simplexcert/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#ifndef SIMPLEXCERT_VERSION
#define SIMPLEXCERT_VERSION "0.0.0"
#endif

namespace simplexcert {

using nlohmann::json;

std::string_view tool_version() { return SIMPLEXCERT_VERSION; }

json rational_to_json(const Rational& value)
{
    return json{{"num", value.numerator_string()}, {"den", value.denominator_string()}};
}

Rational rational_from_json(const json& j)
{
    return Rational::from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

namespace {

json witness_value_to_json(const WitnessValue& value)
{
    if (const auto* scalar = std::get_if<Rational>(&value))
        return rational_to_json(*scalar);
    json arr = json::array();
    for (const auto& c : std::get<RatVector>(value))
        arr.push_back(rational_to_json(c));
    return arr;
}

WitnessValue witness_value_from_json(const json& j)
{
    if (!j.is_array())
        return rational_from_json(j);
    std::vector<Rational> coords;
    for (const auto& c : j)
        coords.push_back(rational_from_json(c));
    return RatVector(std::move(coords));
}

json lemma_to_json(const LemmaResult& r)
{
    json witness = json::array();
    for (const auto& w : r.witness)
        witness.push_back({{"name", w.name}, {"value", witness_value_to_json(w.value)}});
    json out = {{"lemma_id", std::string(to_string(r.id))},
                {"statement", r.statement},
                {"passed", r.passed},
                {"witness", std::move(witness)}};
    if (!r.note.empty())
        out["note"] = r.note;
    return out;
}

LemmaResult lemma_from_json(const json& j)
{
    LemmaResult r;
    const auto id_text = j.at("lemma_id").get<std::string>();
    auto id = lemma_from_string(id_text);
    if (!id)
        throw std::invalid_argument("unknown lemma id '" + id_text + "'");
    r.id = *id;
    r.statement = j.at("statement").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    for (const auto& w : j.at("witness"))
        r.witness.push_back({w.at("name").get<std::string>(), witness_value_from_json(w.at("value"))});
    r.note = j.value("note", std::string());
    return r;
}

std::size_t count_failed(const std::vector<LemmaResult>& ledger)
{
    std::size_t failed = 0;
    for (const auto& r : ledger)
        failed += r.passed ? 0 : 1;
    return failed;
}

} // namespace

json report_to_json(const CertificationReport& report)
{
    json entries = json::array();
    for (const auto& e : report.entries) {
        json ledger = json::array();
        for (const auto& r : e.ledger)
            ledger.push_back(lemma_to_json(r));
        entries.push_back({{"n", e.n},
                           {"well_built", e.well_built},
                           {"well_built_ratio", rational_to_json(e.well_built_ratio)},
                           {"dihedral_cos", rational_to_json(e.dihedral_cos)},
                           {"central_cos", rational_to_json(e.central_cos)},
                           {"ledger", std::move(ledger)},
                           {"oracle_abs_err", format_decimal(e.oracle_abs_err)},
                           {"oracle_ok", e.oracle_ok},
                           {"passed", e.passed()}});
    }

    json doc = {{"tool_version", std::string(tool_version())},
                {"n_max", report.n_max},
                {"base_case", report.base_case},
                {"entries", std::move(entries)},
                {"summary",
                 {{"passed", report.passed_count()},
                  {"failed", report.failed_count()},
                  {"overall", report.overall() ? "pass" : "fail"}}}};
    if (report.fault)
        doc["fault"] = report.fault->str();
    return doc;
}

CertificationReport report_from_json(const json& doc)
{
    CertificationReport report;
    report.n_max = doc.at("n_max").get<std::size_t>();
    report.base_case = doc.at("base_case").get<bool>();
    if (doc.contains("fault"))
        report.fault = Injection::parse(doc.at("fault").get<std::string>());
    for (const auto& j : doc.at("entries")) {
        DimensionEntry e;
        e.n = j.at("n").get<std::size_t>();
        e.well_built = j.at("well_built").get<bool>();
        e.well_built_ratio = rational_from_json(j.at("well_built_ratio"));
        e.dihedral_cos = rational_from_json(j.at("dihedral_cos"));
        e.central_cos = rational_from_json(j.at("central_cos"));
        for (const auto& r : j.at("ledger"))
            e.ledger.push_back(lemma_from_json(r));
        e.oracle_abs_err = parse_decimal(j.at("oracle_abs_err").get<std::string>());
        e.oracle_ok = j.at("oracle_ok").get<bool>();
        report.entries.push_back(std::move(e));
    }
    return report;
}

std::string report_to_text(const CertificationReport& report)
{
    std::ostringstream out;
    out << "simplexcert " << tool_version() << "  n_max=" << report.n_max;
    if (report.fault)
        out << "  fault=" << report.fault->str();
    out << "\n";
    out << "base case n=2: |AO|^2/|OH|^2 = 4 ... " << (report.base_case ? "pass" : "FAIL") << "\n";
    for (const auto& e : report.entries) {
        out << "n=" << std::setw(3) << std::left << e.n << std::right
            << " well-built " << (e.well_built ? "yes" : "NO ")
            << "  ratio " << std::setw(5) << e.well_built_ratio.str()
            << "  dihedral " << std::setw(5) << e.dihedral_cos.str()
            << "  central " << std::setw(6) << e.central_cos.str()
            << "  oracle err " << format_error(e.oracle_abs_err);
        if (!e.ledger.empty())
            out << "  ledger " << (e.ledger.size() - count_failed(e.ledger)) << "/" << e.ledger.size();
        out << "  " << (e.passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& r : e.ledger)
            if (!r.passed)
                out << "    failed " << to_string(r.id) << ": " << r.statement << "\n";
    }
    out << "summary: " << report.passed_count() << " passed, " << report.failed_count() << " failed, overall "
        << (report.overall() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string format_error(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", value);
    return buf;
}

std::string format_decimal(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_decimal(std::string_view text)
{
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    return value;
}

std::string format_degrees(double degrees)
{
    // glibc printf rounds the exact binary value, ties to even.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", degrees);
    return buf;
}

double degrees_from_cosine(const Rational& cosine)
{
    return std::acos(cosine.to_double()) * 180.0 / std::numbers::pi;
}

std::string format_table(std::size_t from, std::size_t to, TableFormat format)
{
    if (from < 2 || to < from)
        throw std::invalid_argument("table range must satisfy 2 <= from <= to");

    std::ostringstream out;
    if (format == TableFormat::csv)
        out << "n,dihedral_cos,dihedral_deg,central_cos,central_deg\n";
    else
        out << std::setw(4) << "n" << std::setw(14) << "dihedral_cos" << std::setw(14) << "dihedral_deg"
            << std::setw(14) << "central_cos" << std::setw(14) << "central_deg" << "\n";

    for (std::size_t n = from; n <= to; ++n) {
        const Rational dihedral = dihedral_cosine(n);
        const Rational central = central_angle_cosine(n);
        const std::string dihedral_deg = format_degrees(degrees_from_cosine(dihedral));
        const std::string central_deg = format_degrees(degrees_from_cosine(central));
        if (format == TableFormat::csv)
            out << n << ',' << dihedral.str() << ',' << dihedral_deg << ',' << central.str() << ','
                << central_deg << "\n";
        else
            out << std::setw(4) << n << std::setw(14) << dihedral.str() << std::setw(14) << dihedral_deg
                << std::setw(14) << central.str() << std::setw(14) << central_deg << "\n";
    }
    return out.str();
}

std::string trace_to_text(const ConstructionScene& scene)
{
    std::ostringstream out;
    out << "construction: base dimension " << scene.base_dim << ", apex simplex dimension "
        << scene.base_dim + 1 << ", ambient dimension " << scene.ambient_dim() << "\n";
    for (Label l : kAllLabels)
        out << to_char(l) << " = " << scene.at(l).str() << "\n";
    out << "H = B + " << scene.h_param_on_bd.str() << " (D - B) = E + " << scene.h_param_on_ef.str()
        << " (F - E)\n";
    out << "circle c: center B, squared radius |BG|^2 = " << scene.circle_sq_radius.str() << "\n";
    out << "plane basis: B - A = " << scene.plane_basis[0].str() << ", C - A = " << scene.plane_basis[1].str()
        << "\n";
    return out.str();
}

} // namespace simplexcert
