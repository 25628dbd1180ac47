#pragma once

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "varpert/constants.hpp"

namespace varpert {

// Keys absent from the file keep their defaults.
inline Constants constants_from_json(const nlohmann::json& j, Constants base = {}) {
    if (!j.is_object()) throw DomainError("constants file: top level must be an object");
    if (j.contains("kappa_eV_A2")) base.kappa = j.at("kappa_eV_A2").get<double>();
    if (j.contains("rydberg_eV")) base.rydberg = j.at("rydberg_eV").get<double>();
    if (j.contains("bohr_A")) base.bohr_radius = j.at("bohr_A").get<double>();
    base.validate();
    return base;
}

inline nlohmann::json constants_to_json(const Constants& c) {
    return {{"kappa_eV_A2", c.kappa}, {"rydberg_eV", c.rydberg}, {"bohr_A", c.bohr_radius}};
}

inline Constants load_constants(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("constants file: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("constants file: ") + e.what());
    }
    return constants_from_json(j);
}

} // namespace varpert
