// ctx: build contextuality constructions, run expectation-decomposition
// reports, enumerate classical bounds, and dump phase-space symbol grids.
//
// Exit codes: 0 success, 2 validation error, 3 basis-fit/convention
// failure, 4 internal tolerance violation (golden mismatch).
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ctx/report.hpp"

namespace {

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Wigner-Weyl contextuality toolkit"};
    app.require_subcommand(1);

    std::string report_target, report_format = "table", out_path;
    auto* rep = app.add_subcommand("report", "run a contextuality report");
    rep->add_option("target", report_target, "kcsb | peres-mermin | yu-oh | config path")->required();
    rep->add_option("--format", report_format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    rep->add_option("--out", out_path, "write to file instead of stdout");

    std::string bounds_target;
    auto* bnd = app.add_subcommand("bounds", "enumerate classical bounds");
    bnd->add_option("target", bounds_target, "kcsb | peres-mermin | yu-oh | config path")->required();
    bnd->add_option("--format", report_format, "table | json")
        ->check(CLI::IsMember({"table", "json"}));
    bnd->add_option("--out", out_path, "write to file instead of stdout");

    std::string weyl_spec, weyl_norm;
    int weyl_dim = 3;
    auto* wey = app.add_subcommand("weyl", "dump a symbol grid");
    wey->add_option("spec", weyl_spec, "identity | Pi1..Pi5 | phi1..phi3 | SigmaGamma | SigmaGamma2 | "
                                       "a 13-ray label | matrix JSON path")
        ->required();
    wey->add_option("--dim", weyl_dim, "odd Hilbert-space dimension (default 3)");
    wey->add_option("--normalization", weyl_norm, "state | observable (default by spec kind)")
        ->check(CLI::IsMember({"state", "observable"}));
    wey->add_option("--out", out_path, "write to file instead of stdout");

    std::string validate_path;
    auto* val = app.add_subcommand("validate", "validate a construction config");
    val->add_option("config", validate_path, "config JSON path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rep->parsed()) {
            ctx::ReportDocument doc = ctx::run_report(report_target);
            std::string text = report_format == "json"  ? ctx::render_json(doc)
                               : report_format == "csv" ? ctx::render_csv(doc)
                                                        : ctx::render_table(doc);
            return write_out(text, out_path);
        }
        if (bnd->parsed()) {
            ctx::ReportDocument doc = ctx::run_bounds(bounds_target);
            std::string text = report_format == "json" ? ctx::render_json(doc) : ctx::render_table(doc);
            return write_out(text, out_path);
        }
        if (wey->parsed()) {
            bool projector_like = weyl_spec.rfind("Pi", 0) == 0 || weyl_spec.rfind("phi", 0) == 0 ||
                                  weyl_spec.rfind("y", 0) == 0 || weyl_spec.rfind("h", 0) == 0 ||
                                  weyl_spec.rfind("z", 0) == 0;
            ctx::SymbolNorm norm = weyl_norm == "state"        ? ctx::SymbolNorm::State
                                   : weyl_norm == "observable" ? ctx::SymbolNorm::Observable
                                   : projector_like            ? ctx::SymbolNorm::State
                                                               : ctx::SymbolNorm::Observable;
            ctx::WeylGrid grid = ctx::dump_weyl(weyl_spec, weyl_dim, norm);
            return write_out(ctx::render_grid(grid), out_path);
        }
        if (val->parsed()) {
            ctx::ConstructionConfig cfg = ctx::load_config_file(validate_path);
            ctx::build_from_config(cfg);
            std::cout << "config ok: " << cfg.name << "\n";
            return 0;
        }
    } catch (const ctx::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ctx::BasisFitError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const ctx::ToleranceError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const ctx::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
