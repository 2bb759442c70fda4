#include "evanescent/config.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace evanescent {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const char* section, std::set<std::string> allowed)
{
    if (!obj.is_object()) throw ConfigError(std::string("section '") + section + "' must be an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key)) throw ConfigError(std::string("unknown key '") + key + "' in '" + section + "'");
}

template <class T>
void read(const json& obj, const char* key, T& out)
{
    if (auto it = obj.find(key); it != obj.end()) out = it->get<T>();
}

ModelTag model_from(const std::string& name)
{
    try {
        return parse_model_tag(name);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace

double ScenarioConfig::moment() const { return m0 ? *m0 : coil_moment(coil); }

DipoleConfig ScenarioConfig::dipole() const { return {moment(), h, omega}; }

std::vector<ResponseModel> ScenarioConfig::response_models() const
{
    std::vector<ResponseModel> out;
    for (ModelTag tag : models) {
        switch (tag) {
            case ModelTag::Drude: out.push_back(ResponseModel::drude(metal)); break;
            case ModelTag::Plasma: out.push_back(ResponseModel::plasma(metal)); break;
            case ModelTag::IdealMetal: out.push_back(ResponseModel::ideal_metal()); break;
            case ModelTag::CustomReflection: throw ConfigError("custom reflection models cannot be configured from a file");
        }
    }
    return out;
}

SweepSpec ScenarioConfig::sweep_spec() const
{
    SweepSpec s;
    s.variable = sweep_variable;
    s.grid = grid;
    if (s.grid.empty()) {
        s.grid = sweep_variable == SweepVariable::Separation ? linear_grid(h, 2.5 * h, 31) : log_grid(1.0, 100.0, 41);
    }
    s.fixed = dipole();
    s.x = x;
    s.y = y;
    s.models = response_models();
    s.output_units = unit;
    return s;
}

ScenarioConfig parse_config(std::string_view json_text, ScenarioConfig cfg)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }

    try {
        only_keys(doc, "<root>", {"metal", "coil", "m0", "geometry", "sweep", "quadrature", "output"});

        if (auto it = doc.find("metal"); it != doc.end()) {
            only_keys(*it, "metal", {"omega_p", "gamma"});
            read(*it, "omega_p", cfg.metal.omega_p);
            read(*it, "gamma", cfg.metal.gamma);
        }
        if (auto it = doc.find("coil"); it != doc.end()) {
            only_keys(*it, "coil", {"loops", "current_statA", "current_A", "radius_cm"});
            read(*it, "loops", cfg.coil.loops);
            read(*it, "current_statA", cfg.coil.current);
            if (auto a = it->find("current_A"); a != it->end())
                cfg.coil.current = convert_current(a->get<double>(), CurrentUnit::A, CurrentUnit::statA);
            read(*it, "radius_cm", cfg.coil.radius);
        }
        if (auto it = doc.find("m0"); it != doc.end()) cfg.m0 = it->get<double>();

        if (auto it = doc.find("geometry"); it != doc.end()) {
            only_keys(*it, "geometry", {"h_cm", "x_cm", "y_cm", "omega_rad_s"});
            read(*it, "h_cm", cfg.h);
            read(*it, "x_cm", cfg.x);
            read(*it, "y_cm", cfg.y);
            read(*it, "omega_rad_s", cfg.omega);
        }

        if (auto it = doc.find("sweep"); it != doc.end()) {
            only_keys(*it, "sweep", {"variable", "grid", "start", "stop", "points", "log", "models"});
            if (auto v = it->find("variable"); v != it->end())
                cfg.sweep_variable = parse_sweep_variable(v->get<std::string>());
            if (auto g = it->find("grid"); g != it->end()) {
                cfg.grid = g->get<std::vector<double>>();
            } else if (it->contains("start") || it->contains("stop") || it->contains("points")) {
                const double start = it->at("start").get<double>();
                const double stop = it->at("stop").get<double>();
                const int points = it->at("points").get<int>();
                const bool log = it->value("log", cfg.sweep_variable == SweepVariable::Frequency);
                cfg.grid = log ? log_grid(start, stop, points) : linear_grid(start, stop, points);
            }
            if (auto m = it->find("models"); m != it->end()) {
                cfg.models.clear();
                for (const auto& name : *m) cfg.models.push_back(model_from(name.get<std::string>()));
            }
        }

        if (auto it = doc.find("quadrature"); it != doc.end()) {
            only_keys(*it, "quadrature", {"rel_tol", "abs_tol_floor", "max_segments", "tail_epsilon", "include_propagating"});
            read(*it, "rel_tol", cfg.quadrature.rel_tol);
            read(*it, "abs_tol_floor", cfg.quadrature.abs_tol_floor);
            read(*it, "max_segments", cfg.quadrature.max_segments);
            read(*it, "tail_epsilon", cfg.quadrature.tail_epsilon);
            read(*it, "include_propagating", cfg.quadrature.include_propagating);
        }

        if (auto it = doc.find("output"); it != doc.end()) {
            only_keys(*it, "output", {"unit", "format", "path"});
            if (auto u = it->find("unit"); u != it->end()) cfg.unit = parse_field_unit(u->get<std::string>());
            if (auto f = it->find("format"); f != it->end()) {
                const auto fmt = f->get<std::string>();
                if (fmt != "csv" && fmt != "json") throw ConfigError("output.format must be 'csv' or 'json'");
                cfg.json = fmt == "json";
            }
            read(*it, "path", cfg.out_path);
        }

        cfg.metal.validate();
        if (!cfg.m0) cfg.coil.validate();
        else if (!(*cfg.m0 > 0.0)) throw ConfigError("m0 must be positive");
        cfg.dipole().validate();
        cfg.quadrature.validate();
        cfg.sweep_spec().validate();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config type error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::vector<double> parse_range(std::string_view text, bool log_spaced)
{
    auto to_double = [](std::string_view s) {
        std::size_t used = 0;
        const std::string str(s);
        double v = 0.0;
        try {
            v = std::stod(str, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != str.size()) throw std::invalid_argument("bad number '" + str + "' in range");
        return v;
    };

    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(':', pos);
        parts.push_back(text.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (parts.size() == 1) return {to_double(parts[0])};
    if (parts.size() != 3) throw std::invalid_argument("range must be VALUE or START:STOP:N");
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double n = to_double(parts[2]);
    if (n < 1 || n != static_cast<int>(n)) throw std::invalid_argument("range point count must be a positive integer");
    return log_spaced ? log_grid(start, stop, static_cast<int>(n)) : linear_grid(start, stop, static_cast<int>(n));
}

}  // namespace evanescent
