#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "almax/acceptance.hpp"
#include "almax/workbench.hpp"

using namespace almax;

namespace {

std::string read_all(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::int64_t> parse_coeffs(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(std::stoll(piece));
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"almax: almost maximal degree curves workbench"};
    app.require_subcommand(1);

    std::string file, curve, order = "degrevlex";
    std::uint32_t characteristic = PrimeField::kDefaultCharacteristic;
    std::uint64_t seed = 0;
    std::size_t trials = 2;
    bool json = false, no_oracle = false;

    auto* an = app.add_subcommand("analyze", "analyze an ideal file (or stdin) or a curve parametrization");
    an->add_option("file", file, "ideal file, '-' or absent for stdin");
    an->add_option("--curve", curve, "four comma separated forms in s, t");
    auto* char_opt = an->add_option("--char", characteristic, "field characteristic");
    an->add_option("--seed", seed, "random seed");
    an->add_option("--order", order, "monomial order")->check(CLI::IsMember({"degrevlex", "lex"}));
    an->add_flag("--json", json, "print the JSON report");
    an->add_flag("--no-oracle", no_oracle, "skip the Koszul oracle");
    an->add_option("--trials", trials, "genericity trials")->check(CLI::Range(1, 64));

    AcceptanceOptions acc;
    std::string fault;
    bool acc_json = false;
    auto* st = app.add_subcommand("selftest", "run the acceptance suite");
    st->add_option("--seed", acc.seed, "random seed");
    st->add_option("--char", acc.characteristic, "field characteristic");
    st->add_flag("--json", acc_json, "print JSON");
    st->add_option("--inject", fault, "inject a fault")
        ->check(CLI::IsMember({"quintic-betti", "nonic-betti", "model-betti"}));

    SearchOptions so;
    std::string coeffs = "1";
    auto* se = app.add_subcommand("search", "search random sparse parametrizations");
    se->add_option("--degree", so.space.degree, "degree of the forms")->check(CLI::PositiveNumber);
    se->add_option("--terms", so.space.terms, "terms per form")->check(CLI::PositiveNumber);
    se->add_option("--coeffs", coeffs, "comma separated coefficient set");
    se->add_option("--candidates", so.space.candidates, "explicit parametrizations to try");
    se->add_option("--budget", so.budget, "number of candidates")->required();
    se->add_option("--seed", so.seed, "random seed");
    se->add_option("--sink", so.sink, "JSONL output file")->required();
    se->add_option("--workers", so.workers, "worker threads")->check(CLI::PositiveNumber);
    se->add_option("--char", so.analyze.characteristic, "field characteristic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::InputError);
    }

    try {
        if (*an) {
            AnalyzeOptions opt;
            opt.characteristic = characteristic;
            opt.override_file_char = char_opt->count() > 0;
            opt.seed = seed;
            opt.order = order == "lex" ? MonomialOrder::lex() : MonomialOrder::degrevlex();
            opt.oracle = !no_oracle;
            opt.trials = trials;
            AnalyzeInput input;
            if (!curve.empty()) {
                input.curve = curve;
            } else if (file.empty() || file == "-") {
                input.ideal_text = read_all(std::cin);
            } else {
                std::ifstream in(file);
                if (!in) {
                    std::cerr << "error: cannot read " << file << "\n";
                    return static_cast<int>(ExitCode::InputError);
                }
                input.ideal_text = read_all(in);
            }
            const auto report = analyze(input, opt);
            std::cout << (json ? to_json(report).dump(2) + "\n" : render_text(report));
            return static_cast<int>(report.failed() ? ExitCode::CheckFailure : ExitCode::Ok);
        }
        if (*st) {
            if (!fault.empty()) acc.fault = fault;
            const auto results = run_acceptance(acc);
            std::cout << (acc_json ? acceptance_json(results, acc).dump(2) + "\n" : render_acceptance(results));
            for (const auto& r : results)
                if (!r.passed) return static_cast<int>(ExitCode::CheckFailure);
            return 0;
        }
        if (*se) {
            so.space.coefficients = parse_coeffs(coeffs);
            so.analyze.seed = so.seed;
            const auto s = run_search(so);
            std::cout << "tried " << s.tried << ", hits " << s.hits << ", duplicates " << s.duplicates
                      << ", rejected " << s.rejected << "\n";
            return 0;
        }
    } catch (const StageError& e) {
        std::cerr << "error in " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::InputError);
    }
    return 0;
}
