// Report documents: per-state contextuality records, bound certificates,
// operator-identity checks, and symbol-grid dumps, rendered as table, JSON,
// or CSV with deterministic 12-significant-digit numbers (byte-identical
// across runs; no timestamps in the payload).
#pragma once

#include <string>

#include <json.hpp>

#include "ctx/config.hpp"
#include "ctx/phase_space.hpp"

namespace ctx {

class ToleranceError : public Error {
  public:
    using Error::Error;
};

struct ReportDocument {
    nlohmann::ordered_json payload;
};

// target: "kcsb" | "peres-mermin" | "yu-oh" | path to a config file.
ReportDocument run_report(const std::string& target);

std::string render_json(const ReportDocument& doc);
std::string render_csv(const ReportDocument& doc);
std::string render_table(const ReportDocument& doc);

// Bound certificates only (the `bounds` subcommand).
ReportDocument run_bounds(const std::string& target);

// Symbol grid of a named operator or a JSON matrix file, Appendix
// orientation (rows x_p, columns x_q).
struct WeylGrid {
    std::string label;
    WeylSymbolOdd symbol;
};
WeylGrid dump_weyl(const std::string& spec, int d, SymbolNorm norm);
std::string render_grid(const WeylGrid& grid);

// Shortest decimal that round-trips at 12 significant digits.
std::string format_number(double x);

}  // namespace ctx
