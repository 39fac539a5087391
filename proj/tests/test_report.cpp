#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "simplexcert/report.hpp"

using namespace simplexcert;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& needle)
{
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++count;
    return count;
}

} // namespace

TEST_CASE("rational json")
{
    const Rational big = Rational::parse("-123456789012345678901234567891/1000");
    const json j = rational_to_json(big);
    CHECK(j.at("num") == "-123456789012345678901234567891");
    CHECK(j.at("den") == "1000");
    CHECK(rational_from_json(j) == big);
    CHECK(rational_to_json(Rational(1, 3)) == json{{"num", "1"}, {"den", "3"}});
}

TEST_CASE("verify document schema")
{
    const json doc = report_to_json(induction_sweep(8));
    CHECK(doc.at("tool_version") == std::string(tool_version()));
    CHECK(doc.at("n_max") == 8);
    REQUIRE(doc.at("entries").size() == 7);
    const json& n3 = doc.at("entries").at(1);
    CHECK(n3.at("n") == 3);
    CHECK(n3.at("well_built") == true);
    CHECK(n3.at("dihedral_cos") == json{{"num", "1"}, {"den", "3"}});
    CHECK(n3.at("central_cos") == json{{"num", "-1"}, {"den", "3"}});
    CHECK(n3.at("oracle_abs_err").is_string());
    REQUIRE(n3.at("ledger").size() == 27);
    const json& lemma = n3.at("ledger").at(0);
    CHECK(lemma.at("lemma_id") == "L5.11");
    CHECK(lemma.at("passed") == true);
    CHECK(lemma.at("witness").is_array());
    CHECK(doc.at("summary").at("passed") == 7);
    CHECK(doc.at("summary").at("failed") == 0);
    CHECK_FALSE(doc.contains("fault"));
}

TEST_CASE("verify document round-trips")
{
    for (const auto& fault : {std::optional<Injection>{}, std::optional(Injection::parse("D:2:-5/3"))}) {
        const CertificationReport report = induction_sweep(6, Execution::parallel, fault);
        const json doc = report_to_json(report);
        const std::string text = doc.dump(2);

        const CertificationReport back = report_from_json(json::parse(text));
        CHECK(back.entries == report.entries);
        CHECK(back.n_max == report.n_max);
        CHECK(back.base_case == report.base_case);
        CHECK(back.fault.has_value() == fault.has_value());
        CHECK(report_to_json(back).dump(2) == text);
        CHECK(json::parse(text).dump(2) == text);
    }
}

TEST_CASE("unknown lemma ids are rejected on read")
{
    json doc = report_to_json(induction_sweep(3));
    doc["entries"][0]["ledger"][0]["lemma_id"] = "L5.20";
    CHECK_THROWS_AS(report_from_json(doc), std::invalid_argument);
}

TEST_CASE("text report")
{
    const std::string ok = report_to_text(induction_sweep(4));
    CHECK(ok.find("overall pass") != std::string::npos);
    const std::string bad = report_to_text(induction_sweep(4, Execution::serial, Injection::parse("E:4:1/1000")));
    CHECK(bad.find("failed L5.14") != std::string::npos);
    CHECK(bad.find("overall fail") != std::string::npos);
}

TEST_CASE("angle table")
{
    CHECK(format_table(2, 8, TableFormat::csv) == read_file(SIMPLEXCERT_GOLDEN_DIR "/table_2_8.csv"));

    std::istringstream rows(format_table(2, 40, TableFormat::csv));
    std::string line;
    std::getline(rows, line);
    CHECK(line == "n,dihedral_cos,dihedral_deg,central_cos,central_deg");
    std::size_t n = 2;
    while (std::getline(rows, line)) {
        std::istringstream fields(line);
        std::string f[5];
        for (auto& field : f)
            std::getline(fields, field, ',');
        CHECK(f[0] == std::to_string(n));
        CHECK(Rational::parse(f[1]) == Rational(1, static_cast<long>(n)));
        CHECK(Rational::parse(f[3]) == Rational(-1, static_cast<long>(n)));
        const double dihedral = std::acos(1.0 / static_cast<double>(n)) * 180.0 / M_PI;
        const double central = std::acos(-1.0 / static_cast<double>(n)) * 180.0 / M_PI;
        CHECK(std::abs(std::stod(f[2]) - dihedral) <= 5e-7);
        CHECK(std::abs(std::stod(f[4]) - central) <= 5e-7);
        ++n;
    }
    CHECK(n == 41);

    const std::string text = format_table(2, 3, TableFormat::text);
    CHECK(text.find("70.528779") != std::string::npos);
    CHECK_THROWS_AS(format_table(1, 4, TableFormat::csv), std::invalid_argument);
    CHECK_THROWS_AS(format_table(5, 4, TableFormat::csv), std::invalid_argument);
}

TEST_CASE("degree formatting")
{
    CHECK(format_degrees(60.0) == "60.000000");
    CHECK(format_degrees(degrees_from_cosine(Rational(-1, 3))) == "109.471221");
    CHECK(format_error(0.0) == "0.000e+00");
    CHECK(format_decimal(0.1) == "0.1");
    CHECK(parse_decimal(format_decimal(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(std::isinf(parse_decimal(format_decimal(INFINITY))));
    CHECK_THROWS_AS(parse_decimal("1.5x"), std::invalid_argument);
}

TEST_CASE("trace text")
{
    const std::string text = trace_to_text(build_construction(2));
    CHECK(text.find("H = (1/6, 1/3, 1/3, 1/6)") != std::string::npos);
    CHECK(text.find("G = (0, 2/3, 2/3, -1/3)") != std::string::npos);
    CHECK(text.find("|BG|^2 = 1/6") != std::string::npos);
}

TEST_CASE("cross-section svg")
{
    for (std::size_t n : {2u, 3u, 9u}) {
        const std::string svg = render_scene_svg(build_construction(n));

        std::istringstream in(svg);
        boost::property_tree::ptree tree;
        CHECK_NOTHROW(boost::property_tree::read_xml(in, tree));
        CHECK(tree.count("svg") == 1);

        CHECK(count_occurrences(svg, "<circle") == 1);
        CHECK(count_occurrences(svg, "class=\"point\"") == 8);
        CHECK(count_occurrences(svg, "class=\"label\"") == 8);
        for (const char* seg : {"AB", "CF", "AE", "BD", "GF", "EF", "CG"})
            CHECK(svg.find(std::string("data-segment=\"") + seg + "\"") != std::string::npos);
        for (char l = 'A'; l <= 'H'; ++l)
            CHECK(svg.find(std::string(">") + l + "</text>") != std::string::npos);
    }
}
