#pragma once

// Machine-readable result envelope emitted by every CLI command: the command
// name, an echo of the parsed inputs, the output payload, wall time, library
// version, and the character-evaluation counter. Serializes to one
// self-describing JSON object and round-trips losslessly.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace kronlab {

inline constexpr const char* kLibraryVersion = "kronlab 1.0.0";

struct ResultRecord {
    std::string command;
    nlohmann::json input;
    nlohmann::json output;
    double timing_ms = 0;
    std::string version = kLibraryVersion;
    std::uint64_t character_evaluations = 0;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

inline nlohmann::json to_json(const ResultRecord& r) {
    return nlohmann::json{{"command", r.command},
                          {"input", r.input},
                          {"output", r.output},
                          {"timing_ms", r.timing_ms},
                          {"version", r.version},
                          {"character_evaluations", r.character_evaluations}};
}

inline ResultRecord record_from_json(const nlohmann::json& j) {
    ResultRecord r;
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input");
    r.output = j.at("output");
    r.timing_ms = j.at("timing_ms").get<double>();
    r.version = j.at("version").get<std::string>();
    r.character_evaluations = j.at("character_evaluations").get<std::uint64_t>();
    return r;
}

}  // namespace kronlab
