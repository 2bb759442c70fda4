#include "evanescent/csv.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace evanescent {

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view field)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("bad number '" + std::string(field) + "' in CSV");
    return v;
}

int parse_int(std::string_view field)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::invalid_argument("bad integer '" + std::string(field) + "' in CSV");
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = line.find(sep, pos);
        out.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

nlohmann::json complex_json(complex v) { return {{"re", v.real()}, {"im", v.imag()}}; }

}  // namespace

std::string to_csv(const std::vector<ResultRow>& rows)
{
    std::string out(csv_header);
    out += '\n';
    for (const ResultRow& r : rows) {
        out += to_string(r.model);
        for (double v : {r.omega, r.x, r.h, r.re_hx, r.im_hx, r.abs_re_hx}) out += ',' + num(v);
        out += ',';
        out += to_string(r.unit);
        out += ',' + num(r.est_error) + ',' + std::to_string(r.segments) + '\n';
    }
    return out;
}

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows) { os << to_csv(rows); }

std::vector<ResultRow> parse_csv(std::string_view text)
{
    std::vector<ResultRow> rows;
    bool header_seen = false;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != csv_header) throw std::invalid_argument("unexpected CSV header");
            header_seen = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 10) throw std::invalid_argument("CSV row needs 10 fields");
        ResultRow r;
        r.model = parse_model_tag(f[0]);
        r.omega = parse_double(f[1]);
        r.x = parse_double(f[2]);
        r.h = parse_double(f[3]);
        r.re_hx = parse_double(f[4]);
        r.im_hx = parse_double(f[5]);
        r.abs_re_hx = parse_double(f[6]);
        r.unit = parse_field_unit(f[7]);
        r.est_error = parse_double(f[8]);
        r.segments = parse_int(f[9]);
        rows.push_back(r);
    }
    if (!header_seen) throw std::invalid_argument("CSV document has no header");
    return rows;
}

std::string to_json(const std::vector<ResultRow>& rows)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const ResultRow& r : rows) {
        nlohmann::json row{{"model", to_string(r.model)},
                           {"omega_rad_s", r.omega},
                           {"x_cm", r.x},
                           {"h_cm", r.h},
                           {"re_Hx", r.re_hx},
                           {"im_Hx", r.im_hx},
                           {"abs_re_Hx", r.abs_re_hx},
                           {"unit", to_string(r.unit)},
                           {"est_error", r.est_error},
                           {"segments", r.segments},
                           {"converged", r.converged}};
        if (!r.error.empty()) row["error"] = r.error;
        arr.push_back(std::move(row));
    }
    return arr.dump(2) + '\n';
}

std::string to_json(const ParamsReport& report)
{
    nlohmann::json freqs = nlohmann::json::array();
    for (const FrequencyEntry& e : report.frequencies) {
        freqs.push_back({{"omega_rad_s", e.omega},
                         {"K_drude", complex_json(e.k_drude)},
                         {"K_plasma", complex_json(e.k_plasma)},
                         {"k0h", e.k0h},
                         {"propagating_suppression", e.propagating_suppression},
                         {"e_over_h", e.e_over_h},
                         {"electric_negligible", e.electric_negligible}});
    }
    nlohmann::json j = {{"m0_erg_per_Oe", report.m0},
                        {"m0_A_m2", report.m0_si},
                        {"h_cm", report.h},
                        {"omega_h_rad_s", report.omega_h},
                        {"omega_threshold_rad_s", report.omega_threshold},
                        {"plasma_like", report.plasma_like},
                        {"frequencies", freqs}};
    if (report.current_si > 0.0) j["coil_current_A"] = report.current_si;
    return j.dump(2) + '\n';
}

}  // namespace evanescent
