#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace pqm {

// Suites: fourier, hw, identities, parity, marginals, coherent, embeddings,
// numbers, poset, schwartz_bruhat, cli. An empty set runs all of them.
struct VerifyConfig {
    std::set<std::string> suites;
    int max_n = 36;        // upper bound applied to every dimension range
    int samples = 100;     // random states per dimension in the Fourier suite
    std::uint64_t seed = 1;
    std::optional<double> tolerance;  // replaces every floating tolerance when set
    bool even_n_exploratory = false;  // adds the even-n parity expansion on the quadruple grid
};

const std::vector<std::string>& verify_suites();

// key=value file with keys tolerance, max_n, samples, seed, even_n_exploratory.
// Throws std::invalid_argument on unknown keys or bad values.
VerifyConfig load_verify_config(const std::string& path);
void validate(const VerifyConfig& cfg);

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    double residual = 0.0;
    double tolerance = 0.0;  // 0 for exact checks
    std::string detail;
    bool informational = false;  // reported with its residual but never fails the run
};

// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& results);

// Deterministic for a given config; ordered by criterion, then name.
std::vector<CheckResult> run_verify(const VerifyConfig& cfg);

nlohmann::json report_json(const std::vector<CheckResult>& results);

}  // namespace pqm
