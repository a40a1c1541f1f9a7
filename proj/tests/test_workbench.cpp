#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "almax/componentwise.hpp"
#include "almax/fixtures.hpp"
#include "almax/workbench.hpp"

using namespace almax;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join(const std::vector<std::string>& forms)
{
    std::string out;
    for (const auto& f : forms) out += (out.empty() ? "" : ", ") + f;
    return out;
}

std::vector<Json> read_jsonl(const std::string& path)
{
    std::vector<Json> out;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(Json::parse(line));
    return out;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path((std::filesystem::temp_directory_path() / ("almax_" + name + "_" + std::to_string(::getpid())))
                   .string())
    {
        std::filesystem::remove(path);
    }
    ~TempFile() { std::filesystem::remove(path); }
};

const RunReport& quintic_report()
{
    static const RunReport r = analyze(AnalyzeInput{"", join(kQuinticForms)}, AnalyzeOptions{});
    return r;
}

const RunReport& nonic_report()
{
    static const RunReport r = analyze(AnalyzeInput{"", join(kNonicForms)}, AnalyzeOptions{});
    return r;
}

}  // namespace

TEST_CASE("ideal files round trip")
{
    const auto I = curve_ideal(kQuinticForms);
    const auto text = render_ideal_file(I);
    const auto J = parse_ideal_file(text);
    CHECK(render_ideal_file(J) == text);
    CHECK(J.ring()->field().characteristic() == PrimeField::kDefaultCharacteristic);

    const auto K = parse_ideal_file("# comment\n\nchar 101\nvars a b c\na*b - c^2   # trailing\n\nb^2\n");
    CHECK(K.ring()->field().characteristic() == 101);
    CHECK(K.generators().size() == 2);
    CHECK(parse_ideal_file(render_ideal_file(K)).generators().size() == 2);

    const auto L = parse_ideal_file("char 101\nvars a b\na^2\n", 7u);
    CHECK(L.ring()->field().characteristic() == 7);
}

TEST_CASE("ideal file errors carry positions")
{
    try {
        parse_ideal_file("char 7\nvars x0 x1\nx0^\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_ideal_file("vars x y\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_file("char 7\n"), ParseError);
    CHECK_THROWS_AS(parse_ideal_file("char seven\nvars x\n"), ParseError);
    try {
        parse_ideal_file("char 7\nvars x y\nx^2 + y\n");
        FAIL("no error");
    } catch (const NonHomogeneousInput& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("term y has degree 1") != std::string::npos);
    }
}

TEST_CASE("analyze maps input errors to exit codes")
{
    try {
        analyze(AnalyzeInput{"char 7\nvars x\nx^", ""}, AnalyzeOptions{});
        FAIL("no error");
    } catch (const StageError& e) {
        CHECK(e.code() == ExitCode::InputError);
    }
    try {
        analyze(AnalyzeInput{"", "s^2, t^2, s*t"}, AnalyzeOptions{});
        FAIL("no error");
    } catch (const StageError& e) {
        CHECK(e.code() == ExitCode::InputError);
    }
}

TEST_CASE("Betti tables render to the golden files")
{
    for (const auto& [name, report] :
         {std::pair{"quintic", &quintic_report()}, std::pair{"nonic", &nonic_report()}}) {
        const auto golden = slurp(std::string(ALMAX_GOLDEN_DIR) + "/" + name + "_betti.txt");
        REQUIRE(!golden.empty());
        CHECK(render_betti(report->invariants.betti) == golden);
        CHECK(parse_betti(golden) == report->invariants.betti);
    }
    CHECK_THROWS_AS(parse_betti("    0  1\n0:  1  x\n"), ParseError);
    CHECK_THROWS_AS(parse_betti("    0  1\n1:  1  -\n"), ParseError);
}

TEST_CASE("Betti tables parse back from render")
{
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        BettiTable t;
        t.set(0, 0, 1);
        const int n = 1 + static_cast<int>(rng.uniform(6));
        for (int k = 0; k < n; ++k)
            t.set(1 + static_cast<int>(rng.uniform(4)), static_cast<int>(rng.uniform(5)), 1 + rng.uniform(300));
        CHECK(parse_betti(render_betti(t)) == t);
    }
}

TEST_CASE("curve reports")
{
    const auto& q = quintic_report();
    CHECK(q.classification.status == Status::AlmostMaximal);
    CHECK(q.classification.deg == 5);
    CHECK(q.classification.r == 2);
    CHECK(q.cwl.overall);
    CHECK_FALSE(q.failed());

    const auto& n = nonic_report();
    CHECK(n.classification.deg == 9);
    CHECK(n.classification.r == 3);
    CHECK_FALSE(n.cwl.overall);
    CHECK_FALSE(n.failed());

    const auto j = to_json(q);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"schema", "input", "seed", "char", "invariants", "betti", "classification",
                                           "cwl", "checks", "timings"});
    for (const auto& c : j.at("checks")) {
        const auto s = c.at("status").get<std::string>();
        CHECK((s == "pass" || s == "flagged"));
    }
    CHECK(render_text(q).find("classification: " + to_string(Status::AlmostMaximal)) != std::string::npos);
}

TEST_CASE("analyze is deterministic")
{
    AnalyzeOptions opt;
    opt.seed = 5;
    const auto a = to_json(analyze(AnalyzeInput{"", join(kQuinticForms)}, opt)).dump();
    const auto b = to_json(analyze(AnalyzeInput{"", join(kQuinticForms)}, opt)).dump();
    CHECK(a == b);
}

TEST_CASE("model ideal through the pipeline")
{
    const auto I = model_ideal(2, 1, 1, Monomial{1, 0, 0, 0}, Monomial{0, 0, 1, 0});
    const auto r = analyze_ideal(I, Json{{"model", "e=2 n=1 r=1"}}, AnalyzeOptions{});
    CHECK(r.classification.status == Status::AlmostMaximal);
    CHECK(r.cwl.overall);

    const auto text = render_ideal_file(I);
    const auto again = analyze(AnalyzeInput{text, ""}, AnalyzeOptions{});
    CHECK(again.invariants.betti == r.invariants.betti);
}

TEST_CASE("sampled parametrizations are reproducible")
{
    SearchSpace space;
    space.degree = 6;
    space.terms = 2;
    space.coefficients = {1, -1, 2};
    for (std::size_t k = 0; k < 10; ++k) {
        const auto a = sample_parametrization(space, 3, k);
        CHECK(a == sample_parametrization(space, 3, k));
        CHECK(parse_curve_forms(a, 101).size() == 4);
    }
    space.terms = 8;
    CHECK_THROWS(sample_parametrization(space, 3, 0));
}

TEST_CASE("search records hits once")
{
    TempFile sink("search");
    SearchOptions opt;
    opt.sink = sink.path;
    opt.workers = 2;
    opt.space.candidates = {join(kQuinticForms), join(kNonicForms), join(kQuinticForms)};
    opt.budget = 3;
    const auto s = run_search(opt);
    CHECK(s.tried == 3);
    CHECK(s.hits == 2);
    CHECK(s.duplicates == 1);

    const auto hits = read_jsonl(sink.path);
    REQUIRE(hits.size() == 2);
    for (const auto& h : hits) {
        const bool quintic = h.at("forms") == join(kQuinticForms);
        CHECK(h.at("r") == (quintic ? 2 : 3));
        CHECK(h.at("cwl") == quintic);
    }

    const auto again = run_search(opt);
    CHECK(again.hits == 0);
    CHECK(again.duplicates == 3);
    CHECK(read_jsonl(sink.path).size() == 2);

    // a stored witness reproduces its report
    const auto& h = hits.front();
    AnalyzeOptions ao;
    ao.seed = h.at("seed").get<std::uint64_t>();
    ao.characteristic = h.at("char").get<std::uint32_t>();
    const auto rep = analyze(AnalyzeInput{"", h.at("forms").get<std::string>()}, ao);
    CHECK(to_json(rep).dump() == h.at("report").dump());
}

TEST_CASE("search with no budget writes nothing")
{
    TempFile sink("empty");
    SearchOptions opt;
    opt.sink = sink.path;
    const auto s = run_search(opt);
    CHECK(s.tried == 0);
    CHECK(read_jsonl(sink.path).empty());
}

TEST_CASE("sampled search runs")
{
    TempFile sink("sampled");
    SearchOptions opt;
    opt.sink = sink.path;
    opt.budget = 6;
    opt.workers = 3;
    opt.seed = 2;
    opt.space.degree = 5;
    opt.space.terms = 1;
    const auto s = run_search(opt);
    CHECK(s.tried == 6);
    CHECK(s.hits + s.duplicates <= s.tried);
    for (const auto& h : read_jsonl(sink.path)) CHECK(h.contains("report"));
}
