#include "evanescent/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace evanescent {

FieldUnit parse_field_unit(std::string_view tag)
{
    if (tag == "Oe") return FieldUnit::Oe;
    if (tag == "mOe") return FieldUnit::mOe;
    if (tag == "T") return FieldUnit::T;
    if (tag == "A/m" || tag == "A_per_m") return FieldUnit::A_per_m;
    throw std::invalid_argument("unknown field unit '" + std::string(tag) + "'");
}

std::string_view to_string(FieldUnit unit)
{
    switch (unit) {
        case FieldUnit::Oe: return "Oe";
        case FieldUnit::mOe: return "mOe";
        case FieldUnit::T: return "T";
        case FieldUnit::A_per_m: return "A_per_m";
    }
    return "?";
}

double convert_field(double value_oe, FieldUnit target)
{
    if (!std::isfinite(value_oe)) throw std::invalid_argument("convert_field: non-finite value");
    switch (target) {
        case FieldUnit::Oe: return value_oe;
        case FieldUnit::mOe: return value_oe * 1e3;
        case FieldUnit::T: return value_oe * constants::oersted_to_tesla;
        case FieldUnit::A_per_m: return value_oe * constants::oersted_to_ampere_per_meter;
    }
    throw std::invalid_argument("convert_field: unknown unit");
}

double convert_current(double value, CurrentUnit from, CurrentUnit to)
{
    if (!std::isfinite(value)) throw std::invalid_argument("convert_current: non-finite value");
    if (from == to) return value;
    if (from == CurrentUnit::statA) return value * constants::statampere_to_ampere;
    return value / constants::statampere_to_ampere;
}

}  // namespace evanescent
