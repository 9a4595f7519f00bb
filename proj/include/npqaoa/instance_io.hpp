#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "npqaoa/errors.hpp"
#include "npqaoa/npp.hpp"

namespace npqaoa {

// Instance file format: {"values": [int, ...], "seed": int|null}.
// The order of `values` is significant; index i maps to qubit i.

inline void save_instance(const NppInstance& instance, const std::string& path) {
    validate_instance(instance);
    nlohmann::json j;
    j["values"] = instance.values;
    if (instance.seed) {
        j["seed"] = *instance.seed;
    } else {
        j["seed"] = nullptr;
    }
    std::ofstream out(path);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw io_error("write failed: " + path);
}

inline NppInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open for reading: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("instance file is not valid JSON: " +
                                    std::string(e.what()));
    }
    NppInstance instance;
    try {
        instance.values = j.at("values").get<std::vector<std::int64_t>>();
        if (j.contains("seed") && !j.at("seed").is_null()) {
            instance.seed = j.at("seed").get<std::uint64_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("instance file has wrong shape: " +
                                    std::string(e.what()));
    }
    validate_instance(instance);
    return instance;
}

}  // namespace npqaoa
