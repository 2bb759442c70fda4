#pragma once

#include "evanescent/report.hpp"
#include "evanescent/sweep.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace evanescent {

inline constexpr std::string_view csv_header =
    "model,omega_rad_s,x_cm,h_cm,re_Hx,im_Hx,abs_re_Hx,unit,est_error,segments";

/// Header plus one line per row; floating point with 17 significant digits,
/// so parse_csv(to_csv(rows)) reproduces every value bit for bit.
std::string to_csv(const std::vector<ResultRow>& rows);
void write_csv(std::ostream& os, const std::vector<ResultRow>& rows);

/// Inverse of to_csv. Throws std::invalid_argument on a malformed document.
std::vector<ResultRow> parse_csv(std::string_view text);

/// JSON array of row objects (same fields as the CSV plus "converged").
std::string to_json(const std::vector<ResultRow>& rows);
std::string to_json(const ParamsReport& report);

}  // namespace evanescent
