#include "cqg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace cqg {

ReportFormat parse_format(const std::string& s) {
    if (s == "table") return ReportFormat::table;
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    throw PreconditionError("unknown format '" + s + "'");
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ojson round_numbers(const ojson& j) {
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) return format_number(v);
        return std::stod(format_number(v));
    }
    if (j.is_array()) {
        ojson out = ojson::array();
        for (const auto& x : j) out.push_back(round_numbers(x));
        return out;
    }
    if (j.is_object()) {
        ojson out = ojson::object();
        for (const auto& [k, v] : j.items()) out[k] = round_numbers(v);
        return out;
    }
    return j;
}

ojson Report::to_json() const {
    ojson j;
    j["command"] = command;
    j["model"] = model;
    j["parameters"] = parameters;
    j["results"] = results;
    j["violations"] = violations;
    j["truncations"] = truncations;
    return round_numbers(j);
}

ojson model_summary(const QGModel& m) {
    ojson j;
    j["name"] = m.name();
    ojson p = ojson::object();
    for (const auto& [k, v] : m.parameters()) p[k] = v;
    j["parameters"] = p;
    j["truncated"] = m.truncated();
    j["truncation_note"] = m.truncation_note();
    return j;
}

namespace {

std::string cell(const ojson& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_number(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ";") + cell(x);
        return s;
    }
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::vector<std::string> columns(const ojson& rows) {
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (const auto& [k, v] : r.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    return cols;
}

void render_rows(const ojson& rows, ReportFormat f, std::ostream& os) {
    const auto cols = columns(rows);
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> line;
        for (const auto& c : cols) line.push_back(r.contains(c) ? cell(r[c]) : "");
        cells.push_back(std::move(line));
    }
    if (f == ReportFormat::csv) {
        for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
        os << '\n';
        for (const auto& line : cells) {
            for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_escape(line[i]);
            os << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        width[i] = cols[i].size();
        for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << line[i];
            if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
        }
        os << '\n';
    };
    emit(cols);
    for (const auto& line : cells) emit(line);
}

}  // namespace

void render(const Report& r, ReportFormat f, std::ostream& os) {
    if (f == ReportFormat::json) {
        os << r.to_json().dump(2) << '\n';
        return;
    }
    const ojson j = r.to_json();
    render_rows(j["results"], f, os);
    if (f == ReportFormat::table) {
        if (!j["violations"].empty()) {
            os << "\nviolations\n";
            render_rows(j["violations"], f, os);
        }
        if (!j["truncations"].empty()) {
            os << "\ntruncations\n";
            render_rows(j["truncations"], f, os);
        }
    }
}

}  // namespace cqg
