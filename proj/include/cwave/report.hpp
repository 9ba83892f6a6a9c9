// Structured command output: named scalars, pass/fail checks with their
// tolerances, and an optional sweep table; printable as text, CSV, or JSON.
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cwave {

enum class OutputFormat { table, csv, json };

struct RunReport {
    struct Check {
        std::string name;
        double value = 0.0; // measured discrepancy (or signed witness)
        double tol = 0.0;   // bound it was tested against
        bool pass = false;
    };

    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, double>> results;
    std::vector<std::pair<std::string, double>> residuals;
    std::vector<Check> checks;
    std::vector<std::string> table_header;
    std::vector<std::vector<double>> table_rows;
    std::vector<std::string> notes;

    void add_param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void add_param(const std::string& k, double v);
    void add_result(const std::string& k, double v) { results.emplace_back(k, v); }
    void add_residual(const std::string& k, double v) { residuals.emplace_back(k, v); }
    // pass iff |value| <= tol.
    void add_check(const std::string& name, double value, double tol);
    // externally decided pass/fail, value and tol recorded for the report.
    void add_check_flag(const std::string& name, bool pass, double value, double tol);
    bool all_pass() const;
};

void print_report(const RunReport& r, OutputFormat f, std::ostream& os);
OutputFormat parse_format(const std::string& name); // "table" | "csv" | "json"

} // namespace cwave
