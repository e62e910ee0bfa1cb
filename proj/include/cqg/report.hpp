#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "cqg/rep_data.hpp"

namespace cqg {

using ojson = nlohmann::ordered_json;

enum class ReportFormat { table, json, csv };

ReportFormat parse_format(const std::string& s);

/// Common report envelope. `results` is an array of flat objects (one row
/// each); table and csv render those rows, json renders the whole envelope.
struct Report {
    std::string command;
    ojson model = ojson::object();
    ojson parameters = ojson::object();
    ojson results = ojson::array();
    ojson violations = ojson::array();
    ojson truncations = ojson::array();

    ojson to_json() const;
};

/// Name, parameters and truncation note of a model.
ojson model_summary(const QGModel& m);

/// Rounds every floating-point number to 12 significant digits.
ojson round_numbers(const ojson& j);

/// "%.12g", with non-finite values spelled inf / -inf / nan.
std::string format_number(double v);

void render(const Report& r, ReportFormat f, std::ostream& os);

}  // namespace cqg
