#include "format.hpp"

#include <iomanip>
#include <sstream>

namespace pseudolin {

namespace {

std::string cell(int observed) { return observed == kZeroDegree ? "-" : std::to_string(observed); }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

} // namespace

Json operator_json(const OrePoly& op)
{
    Json j;
    j["order"] = op.order();
    j["degree"] = op.has_poly_coeffs() && !op.is_zero() ? Json(op.degree()) : Json(nullptr);
    j["text"] = op.to_string();
    Json coeffs = Json::array();
    for (const auto& c : op.coeffs()) {
        Json row = Json::array();
        for (const auto& v : c.num().coeffs()) row.push_back(v.get_str());
        coeffs.push_back(row);
    }
    j["coeffs"] = coeffs;
    return j;
}

Json bounds_json(const BoundReport& r)
{
    Json j;
    j["name"] = r.name;
    j["per_i"] = r.bound;
    Json observed = Json::array(), slack = Json::array();
    for (std::size_t i = 0; i < r.observed.size(); ++i) {
        if (r.observed[i] == kZeroDegree) {
            observed.push_back(nullptr);
            slack.push_back(nullptr);
        } else {
            observed.push_back(r.observed[i]);
            slack.push_back(r.slack(i));
        }
    }
    j["observed"] = observed;
    j["slack"] = slack;
    j["asserted"] = r.asserted;
    j["holds"] = r.holds();
    return j;
}

Json certificate_json(const Certificate& c)
{
    auto [num, den] = c.num.to_bipoly();
    Json j;
    j["numerator"] = num.to_string();
    j["denominator_x"] = den.to_string();
    j["q_power"] = c.power;
    return j;
}

std::string bounds_text(const BoundReport& r)
{
    std::ostringstream os;
    os << "bound " << r.name << " (asserted: " << yes_no(r.asserted) << ", holds: " << yes_no(r.holds()) << ")\n";
    os << std::setw(5) << "i" << std::setw(10) << "observed" << std::setw(10) << "bound" << std::setw(10) << "slack"
       << "\n";
    for (std::size_t i = 0; i < r.bound.size(); ++i) {
        os << std::setw(5) << i << std::setw(10) << cell(r.observed[i]) << std::setw(10) << r.bound[i]
           << std::setw(10) << (r.observed[i] == kZeroDegree ? std::string("-") : std::to_string(r.slack(i)))
           << "\n";
    }
    return os.str();
}

std::string csv_header() { return "instance,params,i,observed,bound,slack,asserted\n"; }

std::string csv_line(const CsvRow& row)
{
    std::ostringstream os;
    os << csv_field(row.instance) << ',' << csv_field(row.params) << ',' << row.i << ',';
    if (row.observed == kZeroDegree)
        os << ",";
    else
        os << row.observed << ',';
    os << row.bound << ',';
    if (row.observed != kZeroDegree) os << row.bound - row.observed;
    os << ',' << (row.asserted ? "true" : "false") << '\n';
    return os.str();
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

} // namespace pseudolin
