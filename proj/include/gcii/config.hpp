#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gcii/code.hpp"

namespace gcii {

/// Serialized code description: {"n":..,"b":..,"poly":"0x..","u":[..]}.
/// Keys are emitted in that order so canonical files round-trip byte for
/// byte.
struct CodeConfig {
    int n = 0;
    int b = 0;
    std::uint32_t poly = 0;
    std::vector<int> u;

    bool operator==(const CodeConfig&) const = default;
};

inline std::string config_to_json(const CodeConfig& cfg) {
    nlohmann::ordered_json j;
    j["n"] = cfg.n;
    j["b"] = cfg.b;
    j["poly"] = "0x" + Field::hex(cfg.poly);
    j["u"] = cfg.u;
    return j.dump() + "\n";
}

inline CodeConfig config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what());
    }
    CodeConfig cfg;
    try {
        cfg.n = j.at("n").get<int>();
        cfg.b = j.at("b").get<int>();
        cfg.u = j.at("u").get<std::vector<int>>();
        const auto& poly = j.at("poly");
        if (poly.is_string()) {
            const std::string s = poly.get<std::string>();
            std::size_t used = 0;
            cfg.poly = static_cast<std::uint32_t>(std::stoul(s, &used, s.starts_with("0x") || s.starts_with("0X") ? 16 : 10));
            if (used != s.size()) throw ParseError("malformed poly value '" + s + "'");
        } else {
            cfg.poly = poly.get<std::uint32_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config missing or malformed field: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed poly value");
    } catch (const std::out_of_range&) {
        throw ParseError("poly value out of range");
    }
    return cfg;
}

inline FieldPtr make_field(const CodeConfig& cfg) {
    return cfg.poly == 0 ? field_default(cfg.b) : field_new(cfg.b, cfg.poly);
}

inline GcCode make_code(const CodeConfig& cfg) {
    FieldPtr field = make_field(cfg);
    return GcCode::build(std::move(field), cfg.n, LevelProfile::from_u_vector(cfg.u, cfg.n));
}

}  // namespace gcii
