#pragma once

#include <string>

#include <json.hpp>

#include "pqm/finite_qm.hpp"

namespace pqm {

// On-disk state: {"n", "rep", "amplitudes": [[re, im], ...], "metadata"?}.
// Doubles are written in shortest round-trip form, so read(write(f)) == f bit for bit.
struct StateFile {
    FiniteState state;
    nlohmann::json metadata;  // null when absent
};

std::string state_to_json(const FiniteState& f, const nlohmann::json& metadata = nullptr);
// Throws std::invalid_argument on malformed input.
StateFile state_from_json(const std::string& text);

void write_state_file(const std::string& path, const FiniteState& f, const nlohmann::json& metadata = nullptr);
StateFile read_state_file(const std::string& path);

}  // namespace pqm
