#include "cwave/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "cwave/errors.hpp"

namespace cwave {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

void RunReport::add_param(const std::string& k, double v) { params.emplace_back(k, num(v)); }

void RunReport::add_check(const std::string& name, double value, double tol) {
    checks.push_back({name, value, tol, std::abs(value) <= tol});
}

void RunReport::add_check_flag(const std::string& name, bool pass, double value, double tol) {
    checks.push_back({name, value, tol, pass});
}

bool RunReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

static void print_table(const RunReport& r, std::ostream& os) {
    os << "command: " << r.command << "\n";
    if (!r.params.empty()) {
        os << "params:\n";
        for (const auto& [k, v] : r.params) os << "  " << k << " = " << v << "\n";
    }
    if (!r.results.empty()) {
        os << "results:\n";
        for (const auto& [k, v] : r.results) os << "  " << k << " = " << num(v) << "\n";
    }
    if (!r.residuals.empty()) {
        os << "residuals:\n";
        for (const auto& [k, v] : r.residuals) os << "  " << k << " = " << num(v) << "\n";
    }
    if (!r.table_rows.empty()) {
        os << "table:\n  ";
        for (size_t c = 0; c < r.table_header.size(); ++c)
            os << r.table_header[c] << (c + 1 < r.table_header.size() ? "  " : "\n");
        for (const auto& row : r.table_rows) {
            os << "  ";
            for (size_t c = 0; c < row.size(); ++c) os << num(row[c]) << (c + 1 < row.size() ? "  " : "\n");
        }
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    for (const auto& c : r.checks)
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  value=" << num(c.value)
           << "  tol=" << num(c.tol) << "\n";
}

static void print_csv(const RunReport& r, std::ostream& os) {
    if (!r.table_rows.empty()) {
        for (size_t c = 0; c < r.table_header.size(); ++c)
            os << r.table_header[c] << (c + 1 < r.table_header.size() ? "," : "\n");
        for (const auto& row : r.table_rows) {
            for (size_t c = 0; c < row.size(); ++c) os << num(row[c]) << (c + 1 < row.size() ? "," : "\n");
        }
        return;
    }
    os << "name,value\n";
    for (const auto& [k, v] : r.results) os << k << "," << num(v) << "\n";
    for (const auto& [k, v] : r.residuals) os << k << "," << num(v) << "\n";
    for (const auto& c : r.checks) os << "check:" << c.name << "," << (c.pass ? 1 : 0) << "\n";
}

static void print_json(const RunReport& r, std::ostream& os) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.results) results[k] = v;
    j["results"] = results;
    nlohmann::ordered_json residuals = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.residuals) residuals[k] = v;
    j["residuals"] = residuals;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"value", c.value}, {"tol", c.tol}, {"pass", c.pass}});
    j["checks"] = checks;
    if (!r.table_rows.empty()) {
        j["table"] = {{"header", r.table_header}, {"rows", r.table_rows}};
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    j["pass"] = r.all_pass();
    os << j.dump(2) << "\n";
}

void print_report(const RunReport& r, OutputFormat f, std::ostream& os) {
    switch (f) {
        case OutputFormat::table: print_table(r, os); break;
        case OutputFormat::csv: print_csv(r, os); break;
        case OutputFormat::json: print_json(r, os); break;
    }
}

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ConfigError("unknown format '" + name + "'");
}

} // namespace cwave
