#pragma once

// Gaussian (CGS) units are used everywhere inside the library. SI only
// shows up when a value is reported.

#include <numbers>
#include <string_view>

namespace evanescent {

namespace constants {

/// Speed of light in vacuum, cm/s.
inline constexpr double c = 2.99792458e10;

inline constexpr double oersted_to_tesla = 1e-4;
/// 1 Oe = 1000/(4 pi) A/m.
inline constexpr double oersted_to_ampere_per_meter = 1e3 / (4.0 * std::numbers::pi);
inline constexpr double statampere_to_ampere = 1.0 / 2.99792458e9;

}  // namespace constants

/// Vacuum wave number k0 = omega/c in 1/cm.
constexpr double wave_number(double omega) { return omega / constants::c; }

enum class FieldUnit { Oe, mOe, T, A_per_m };
enum class CurrentUnit { statA, A };

/// Accepts "Oe", "mOe", "T", "A/m" and "A_per_m". Throws std::invalid_argument otherwise.
FieldUnit parse_field_unit(std::string_view tag);
std::string_view to_string(FieldUnit unit);

double convert_field(double value_oe, FieldUnit target);
double convert_current(double value, CurrentUnit from, CurrentUnit to);

}  // namespace evanescent
