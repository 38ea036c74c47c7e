#pragma once

#include "pseudolin/instances.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pseudolin {

using Json = nlohmann::ordered_json;

/// {order, degree, text, coeffs}; coeffs[i] lists the rational coefficients
/// of p_i in increasing powers of x.
Json operator_json(const OrePoly& op);
/// {name, per_i, observed, slack, asserted}; zero coefficients give null.
Json bounds_json(const BoundReport& r);
Json certificate_json(const Certificate& c);

/// Fixed-width table of i, observed, bound, slack.
std::string bounds_text(const BoundReport& r);

struct CsvRow {
    std::string instance, params;
    int i = 0;
    int observed = kZeroDegree;
    long bound = 0;
    bool asserted = true;
};

std::string csv_header();
std::string csv_line(const CsvRow& row);

std::string yes_no(bool v);

} // namespace pseudolin
