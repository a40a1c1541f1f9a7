#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "almax/classifier.hpp"

namespace almax {

using Json = nlohmann::ordered_json;

// ----------------------------------------------------------------- files

/// char <p> / vars <name>+ / one polynomial per line; `#` starts a comment.
/// `characteristic` replaces the header value when given.
Ideal parse_ideal_file(const std::string& text, std::optional<std::uint32_t> characteristic = std::nullopt);
std::string render_ideal_file(const Ideal& ideal);

class NonHomogeneousInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rows j, columns i, "-" for zero.
std::string render_betti(const BettiTable& bt);
BettiTable parse_betti(const std::string& text);

/// Splits "f1, f2, ..." and parses each form in k[s, t].
std::vector<Polynomial> parse_curve_forms(const std::string& text, std::uint32_t characteristic);

// ---------------------------------------------------------------- analyze

enum class ExitCode { Ok = 0, CheckFailure = 1, InputError = 2, GenericityFailure = 3 };

/// Error raised inside one pipeline stage.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, ExitCode code, const std::string& message);
    const std::string& stage() const { return stage_; }
    ExitCode code() const { return code_; }

private:
    std::string stage_;
    ExitCode code_;
};

struct AnalyzeOptions {
    std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
    /// apply `characteristic` to ideal files as well, overriding their header
    bool override_file_char = false;
    std::uint64_t seed = 0;
    MonomialOrder order = MonomialOrder::degrevlex();
    bool oracle = true;
    std::size_t trials = 2;
    /// the input is known to be a variety (curve parametrizations are)
    bool variety = false;
};

struct AnalyzeInput {
    /// ideal file text, used when `curve` is empty
    std::string ideal_text;
    /// comma separated binary forms
    std::string curve;
};

struct CheckResult {
    std::string name;
    /// pass, fail or flagged
    std::string status;
    Json details;
};

struct RunReport {
    RingPtr ring;
    Json input;
    std::uint64_t seed = 0;
    std::uint32_t characteristic = 0;
    Invariants invariants;
    Classification classification;
    CWLReport cwl;
    std::vector<CheckResult> checks;
    Json timings;

    bool failed() const;
};

RunReport analyze(const AnalyzeInput& input, const AnalyzeOptions& opt);
/// Pipeline on an ideal already in hand; `input` is echoed into the report.
RunReport analyze_ideal(const Ideal& ideal, Json input, const AnalyzeOptions& opt);

Json betti_json(const BettiTable& bt);
Json cwl_json(const CWLReport& cwl);
Json to_json(const RunReport& report);
std::string render_text(const RunReport& report);

// ----------------------------------------------------------------- search

struct SearchSpace {
    int degree = 5;
    int terms = 2;
    std::vector<std::int64_t> coefficients{1};
    /// when non-empty, these parametrizations are tried in turn instead of sampling
    std::vector<std::string> candidates;
};

struct SearchOptions {
    SearchSpace space;
    std::size_t budget = 0;
    std::uint64_t seed = 0;
    std::string sink;
    std::size_t workers = 1;
    AnalyzeOptions analyze;
};

struct SearchSummary {
    std::size_t tried = 0;
    std::size_t hits = 0;
    std::size_t duplicates = 0;
    std::size_t rejected = 0;
};

/// Candidate parametrization number k, a pure function of (space, seed, k).
std::string sample_parametrization(const SearchSpace& space, std::uint64_t seed, std::size_t k);
/// Appends new almost-maximal hits to the JSONL sink, one line each.
SearchSummary run_search(const SearchOptions& opt);

}  // namespace almax
