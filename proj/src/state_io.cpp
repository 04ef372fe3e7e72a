#include "pqm/state_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pqm {

namespace {
[[noreturn]] void malformed(const std::string& what) { throw std::invalid_argument("pqm: malformed state file: " + what); }
}  // namespace

std::string state_to_json(const FiniteState& f, const nlohmann::json& metadata) {
    nlohmann::json j;
    j["n"] = f.n;
    j["rep"] = to_string(f.rep);
    auto& amps = j["amplitudes"] = nlohmann::json::array();
    for (const cd& z : f.amplitudes) amps.push_back({z.real(), z.imag()});
    if (!metadata.is_null()) j["metadata"] = metadata;
    return j.dump(2) + "\n";
}

StateFile state_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(e.what());
    }
    if (!j.is_object()) malformed("top level is not an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) malformed("missing integer \"n\"");
    if (!j.contains("rep") || !j["rep"].is_string()) malformed("missing string \"rep\"");
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) malformed("missing array \"amplitudes\"");

    const i64 n = j["n"].get<i64>();
    const std::string rep = j["rep"].get<std::string>();
    if (rep != "position" && rep != "momentum") malformed("rep must be \"position\" or \"momentum\"");
    const auto& amps = j["amplitudes"];
    if (n < 1 || amps.size() != static_cast<std::size_t>(n)) malformed("amplitude count does not match n");

    std::vector<cd> v;
    v.reserve(amps.size());
    for (const auto& z : amps) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
            malformed("amplitudes must be [re, im] number pairs");
        }
        v.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
    StateFile out{FiniteState(n, rep == "position" ? Rep::position : Rep::momentum, std::move(v)), nullptr};
    if (j.contains("metadata")) out.metadata = j["metadata"];
    return out;
}

void write_state_file(const std::string& path, const FiniteState& f, const nlohmann::json& metadata) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("pqm: cannot write " + path);
    os << state_to_json(f, metadata);
    if (!os) throw std::runtime_error("pqm: write failed for " + path);
}

StateFile read_state_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("pqm: cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return state_from_json(ss.str());
}

}  // namespace pqm
