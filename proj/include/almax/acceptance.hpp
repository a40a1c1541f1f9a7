#pragma once

#include <optional>
#include <string>
#include <vector>

#include "almax/workbench.hpp"

namespace almax {

struct AcceptanceOptions {
    std::uint64_t seed = 0;
    std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
    std::size_t trials = 2;
    /// corrupts one stored value before the checks run: quintic-betti, nonic-betti, model-betti
    std::optional<std::string> fault;
    /// run criterion 11 (repeats the suite, also at `compare_char`)
    bool determinism = true;
    std::uint32_t compare_char = 101;
};

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    Json details;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);
Json acceptance_json(const std::vector<CriterionResult>& results, const AcceptanceOptions& opt);
/// "PASS  3  name" lines
std::string render_acceptance(const std::vector<CriterionResult>& results);

}  // namespace almax
