#include "simplexcert/cli.hpp"

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "simplexcert/report.hpp"
#include "simplexcert/sweep.hpp"

namespace simplexcert {

namespace {

struct VerifyOptions {
    long max_dim = static_cast<long>(kDefaultMaxDim);
    std::string format = "json";
    std::string inject;
};

struct TableOptions {
    long from = 2;
    long to = 0;
    std::string format = "csv";
};

struct TraceOptions {
    long dim = 0;
    std::string svg_path;
};

int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err)
{
    if (opts.max_dim < 2) {
        err << "verify: --max-dim must be at least 2; angles between faces need two or more dimensions\n";
        return kExitUsage;
    }
    std::optional<Injection> fault;
    if (!opts.inject.empty()) {
        try {
            fault = Injection::parse(opts.inject);
        } catch (const std::exception& e) {
            err << "verify: bad --inject '" << opts.inject << "': " << e.what() << "\n";
            return kExitUsage;
        }
    }

    CertificationReport report;
    try {
        report = induction_sweep(static_cast<std::size_t>(opts.max_dim), Execution::parallel, fault);
    } catch (const std::invalid_argument& e) {
        err << "verify: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "verify: " << e.what() << "\n";
        return kExitUsage;
    }

    if (opts.format == "json")
        out << report_to_json(report).dump(2) << "\n";
    else
        out << report_to_text(report);
    return report.overall() ? kExitPass : kExitCheckFailed;
}

int run_table(const TableOptions& opts, std::ostream& out, std::ostream& err)
{
    if (opts.from < 2 || opts.to < opts.from) {
        err << "table: need 2 <= --from <= --to\n";
        return kExitUsage;
    }
    const auto format = opts.format == "csv" ? TableFormat::csv : TableFormat::text;
    out << format_table(static_cast<std::size_t>(opts.from), static_cast<std::size_t>(opts.to), format);
    return kExitPass;
}

int run_trace(const TraceOptions& opts, std::ostream& out, std::ostream& err)
{
    if (opts.dim < 2) {
        err << "trace: --dim must be at least 2\n";
        return kExitUsage;
    }
    const ConstructionScene scene = build_construction(static_cast<std::size_t>(opts.dim));
    out << trace_to_text(scene);
    if (!opts.svg_path.empty()) {
        std::ofstream file(opts.svg_path, std::ios::binary);
        file << render_scene_svg(scene);
        file.close();
        if (!file) {
            err << "trace: could not write '" << opts.svg_path << "'\n";
            return kExitUsage;
        }
        out << "wrote " << opts.svg_path << "\n";
    }
    return kExitPass;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact certification of regular-simplex angle laws", "simplexcert"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the exact certification sweep");
    verify_cmd->add_option("--max-dim", verify.max_dim, "Largest simplex dimension to certify")
        ->capture_default_str();
    verify_cmd->add_option("--format", verify.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    verify_cmd->add_option("--inject", verify.inject, "Fault to inject into every scene, POINT:COORD:DELTA");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Print dihedral and central angles");
    table_cmd->add_option("--from", table.from, "First dimension")->capture_default_str();
    table_cmd->add_option("--to", table.to, "Last dimension")->required();
    table_cmd->add_option("--format", table.format, "Output format")
        ->check(CLI::IsMember({"csv", "text"}))
        ->capture_default_str();

    TraceOptions trace;
    auto* trace_cmd = app.add_subcommand("trace", "Dump the plane cross-section construction");
    trace_cmd->add_option("--dim", trace.dim, "Base dimension of the construction")->required();
    trace_cmd->add_option("--svg", trace.svg_path, "Write an SVG drawing to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify_cmd->parsed())
            return run_verify(verify, out, err);
        if (table_cmd->parsed())
            return run_table(table, out, err);
        return run_trace(trace, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

} // namespace simplexcert
