#include "almax/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace almax {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string without_comment(const std::string& line)
{
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

void require_homogeneous(const Polynomial& p, std::size_t line)
{
    if (p.is_homogeneous()) return;
    const int lead = p.leading_monomial().degree();
    for (const auto& t : p.terms())
        if (t.monomial.degree() != lead)
            throw NonHomogeneousInput("line " + std::to_string(line) + ": generator is not homogeneous: term " +
                                      monomial_to_string(t.monomial, *p.ring()) + " has degree " +
                                      std::to_string(t.monomial.degree()) + ", leading term has degree " +
                                      std::to_string(lead));
}

}  // namespace

// ----------------------------------------------------------------- files

Ideal parse_ideal_file(const std::string& text, std::optional<std::uint32_t> override_char)
{
    const auto lines = split_lines(text);
    std::optional<std::uint32_t> characteristic;
    RingPtr ring;
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const std::size_t lineno = k + 1;
        const std::string body = without_comment(lines[k]);
        const std::string content = trim(body);
        if (content.empty()) continue;
        const std::size_t col = body.find_first_not_of(" \t") + 1;
        if (!characteristic) {
            auto w = words(content);
            if (w.size() != 2 || w[0] != "char") throw ParseError(lineno, col, "expected 'char <p>'");
            try {
                std::size_t used = 0;
                const auto p = std::stoull(w[1], &used);
                if (used != w[1].size() || p > 0xffffffffULL) throw std::invalid_argument(w[1]);
                characteristic = override_char.value_or(static_cast<std::uint32_t>(p));
            } catch (const std::logic_error&) {
                throw ParseError(lineno, col + 5, "characteristic must be a positive integer");
            }
            continue;
        }
        if (!ring) {
            auto w = words(content);
            if (w.size() < 2 || w[0] != "vars") throw ParseError(lineno, col, "expected 'vars <name>+'");
            try {
                ring = make_ring(std::vector<std::string>(w.begin() + 1, w.end()), *characteristic);
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, col, e.what());
            }
            continue;
        }
        auto p = parse_polynomial(body, ring, lineno);
        require_homogeneous(p, lineno);
        gens.push_back(std::move(p));
    }
    if (!characteristic) throw ParseError(lines.size() + 1, 1, "missing 'char <p>' header");
    if (!ring) throw ParseError(lines.size() + 1, 1, "missing 'vars' header");
    return Ideal(ring, std::move(gens));
}

std::string render_ideal_file(const Ideal& ideal)
{
    const auto& R = *ideal.ring();
    std::string out = "char " + std::to_string(R.field().characteristic()) + "\nvars";
    for (const auto& n : R.names()) out += " " + n;
    out += "\n";
    for (const auto& g : ideal.generators()) out += g.to_string() + "\n";
    return out;
}

std::string render_betti(const BettiTable& bt)
{
    if (bt.empty()) return "";
    const int cols = bt.pdim() + 1;
    const int rows = bt.reg() + 1;
    std::size_t w = std::to_string(cols - 1).size();
    for (const auto& [ij, b] : bt.entries()) w = std::max(w, std::to_string(b).size());
    const std::size_t label = std::to_string(rows - 1).size() + 1;

    auto pad = [](const std::string& s, std::size_t width) { return std::string(width - std::min(width, s.size()), ' ') + s; };
    std::string out(label, ' ');
    for (int i = 0; i < cols; ++i) out += "  " + pad(std::to_string(i), w);
    out += "\n";
    for (int j = 0; j < rows; ++j) {
        out += pad(std::to_string(j) + ":", label);
        for (int i = 0; i < cols; ++i) {
            const auto b = bt.at(i, j);
            out += "  " + pad(b ? std::to_string(b) : "-", w);
        }
        out += "\n";
    }
    return out;
}

BettiTable parse_betti(const std::string& text)
{
    const auto lines = split_lines(text);
    if (lines.empty()) return {};
    const auto header = words(lines[0]);
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] != std::to_string(i)) throw ParseError(1, 1, "header must list columns 0, 1, ...");
    BettiTable bt;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto w = words(lines[k]);
        if (w.empty()) continue;
        const std::string expect = std::to_string(k - 1) + ":";
        if (w[0] != expect) throw ParseError(k + 1, 1, "expected row label '" + expect + "'");
        if (w.size() != header.size() + 1) throw ParseError(k + 1, 1, "row has the wrong number of entries");
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i] == "-") continue;
            std::size_t used = 0;
            std::uint64_t v = 0;
            try {
                v = std::stoull(w[i], &used);
            } catch (const std::logic_error&) {
                used = 0;
            }
            const auto col = lines[k].find(w[i]) + 1;
            if (used != w[i].size() || v == 0) throw ParseError(k + 1, col, "entry must be '-' or a positive integer");
            bt.set(static_cast<int>(i - 1), static_cast<int>(k - 1), v);
        }
    }
    return bt;
}

std::vector<Polynomial> parse_curve_forms(const std::string& text, std::uint32_t characteristic)
{
    auto st = make_ring({"s", "t"}, characteristic);
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string piece = text.substr(start, comma - start);
        if (trim(piece).empty()) throw ParseError(1, start + 1, "empty form");
        try {
            out.push_back(parse_polynomial(piece, st, 1));
        } catch (const ParseError& e) {
            throw ParseError(1, start + e.column(), e.message());
        }
        start = comma + 1;
    }
    if (out.size() != 4) throw std::invalid_argument("a curve in P^3 needs exactly four forms");
    return out;
}

// ---------------------------------------------------------------- analyze

StageError::StageError(std::string stage, ExitCode code, const std::string& message)
    : std::runtime_error(stage + ": " + message), stage_(std::move(stage)), code_(code)
{
}

bool RunReport::failed() const
{
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == "fail"; });
}

namespace {

Json int_vector(const std::vector<std::int64_t>& v)
{
    Json out = Json::array();
    for (auto x : v) out.push_back(x);
    return out;
}

std::string status_of(bool ok)
{
    return ok ? "pass" : "fail";
}

std::vector<CheckResult> run_checks(const Ideal& ideal, const RunReport& rep, const AnalyzeOptions& opt)
{
    const auto& inv = rep.invariants;
    const auto& cls = rep.classification;
    const auto& R = *ideal.ring();
    std::vector<CheckResult> out;

    if (inv.oracle_agrees)
        out.push_back({"oracle_equivalence", status_of(*inv.oracle_agrees), Json::object()});

    {
        const auto in_betti = is_stable_monomial_ideal(inv.initial) ? betti_stable_monomial(inv.initial)
                                                                    : betti_numbers(to_ideal(inv.initial, ideal.ring()));
        out.push_back({"cancellation", status_of(inv.betti.dominated_by(in_betti)),
                       Json{{"initial_betti", betti_json(in_betti)}}});
    }
    out.push_back({"euler_identity", status_of(inv.betti.numerator() == inv.series.numerator),
                   Json{{"betti_numerator", int_vector(inv.betti.numerator())},
                        {"hilbert_numerator", int_vector(inv.series.numerator)}}});

    const auto bound = binomial(cls.e + cls.r, cls.e);
    out.push_back({"degree_bound", status_of(cls.deg <= bound), Json{{"deg", cls.deg}, {"bound", bound}}});

    {
        bool ok = cls.degree_depth_test == cls.witness.has_value();
        Json d{{"degree_depth_test", cls.degree_depth_test}, {"shape_test", cls.witness.has_value()}};
        if (cls.witness) {
            const int duv = (cls.witness->first * cls.witness->second).degree();
            d["deg_uv"] = duv;
            d["reg_R"] = cls.reg_R;
            ok = ok && cls.reg_R == duv - 1;
        }
        out.push_back({"initial_ideal_equivalence", status_of(ok), d});
    }

    if (cls.status == Status::MaximalDegreeACM)
        out.push_back({"maximal_degree", status_of(cls.discrepancies.empty()), Json{{"discrepancies", cls.discrepancies}}});

    if (cls.status == Status::AlmostMaximal) {
        {
            const auto mism = compare_predicted(cls.predicted, inv.betti);
            out.push_back({"betti_prediction", status_of(mism.empty()),
                           Json{{"case", to_string(cls.betti_case)}, {"determined", cls.predicted.determined},
                                {"mismatches", mism}}});
        }
        {
            const auto chi = check_chi(inv.betti, cls.e, cls.r, cls.reg_R);
            std::string st = chi.stated_holds ? "pass" : (chi.signed_holds ? "flagged" : "fail");
            Json d{{"observed", int_vector(chi.observed)},
                   {"stated", int_vector(chi.stated)},
                   {"signed", int_vector(chi.signed_pattern)}};
            if (st == "flagged") d["note"] = "value at reg+1 is (-1)^reg, not 1";
            out.push_back({"noether_chi", st, d});
        }
        {
            const auto g = check_genus(inv);
            out.push_back({"hilbert_polynomial_closed_form", status_of(g.poly_match),
                           Json{{"direct", g.direct_poly.to_string()}, {"closed_form", g.closed_poly.to_string()}}});
            Json d{{"direct", g.direct}, {"closed_form", g.closed}, {"difference", g.closed - g.direct}};
            if (g.flagged) d["note"] = "closed form differs from (-1)^n (P(0) - 1) by " + std::to_string(g.closed - g.direct);
            out.push_back({"genus_closed_form", g.flagged ? "flagged" : "pass", d});
        }
        {
            const bool formula = thm45_verdict(cls.reg_R, cls.r, inv.betti.at(1, cls.r + 1));
            out.push_back({"componentwise_formula", status_of(formula == rep.cwl.overall),
                           Json{{"formula", formula}, {"direct", rep.cwl.overall}}});
        }
        {
            const auto p = check_prop43(ideal, inv);
            Json d{{"subcase", to_string(p.subcase)},
                   {"component_linear", p.component_linear},
                   {"predicted_linear", p.predicted_linear}};
            if (p.component_cm) d["component_cohen_macaulay"] = *p.component_cm;
            if (p.initial_beta) d["initial_beta_1_r+1"] = *p.initial_beta;
            if (p.single_degree) d["generated_in_degree_r+1"] = *p.single_degree;
            out.push_back({"first_component", status_of(p.passed), d});
        }
        {
            const auto b = check_bounds_prop49(cls.e, cls.r, cls.reg_R, cls.deg);
            std::string st = b.passed ? "pass" : (opt.variety ? "fail" : "flagged");
            Json d{{"reg_X", b.reg_X}, {"upper", b.upper}, {"slack", b.slack}, {"variety", opt.variety}};
            if (st == "flagged") d["note"] = "bound is only claimed for varieties";
            out.push_back({"regularity_bounds", st, d});
        }
    }

    {
        const auto g = gin_crosscheck(inv.gin.gin, inv.betti, ideal.ring());
        Json d{{"gin", g.gin.to_string(R)}, {"stable", g.stable}, {"same_betti", g.same_betti},
               {"verdict", g.verdict}, {"direct", rep.cwl.overall}};
        if (g.verdict != rep.cwl.overall)
            d["note"] = "Gin criterion is a characteristic zero statement; disagreement over F_" +
                        std::to_string(R.field().characteristic());
        out.push_back({"gin_crosscheck", g.verdict == rep.cwl.overall ? "pass" : "flagged", d});
    }
    return out;
}

}  // namespace

RunReport analyze_ideal(const Ideal& ideal, Json input, const AnalyzeOptions& opt)
{
    RunReport rep;
    rep.ring = ideal.ring();
    rep.input = std::move(input);
    rep.seed = opt.seed;
    rep.characteristic = ideal.ring()->field().characteristic();
    Rng rng(opt.seed);
    try {
        rep.invariants = compute_invariants(ideal, opt.trials, rng, opt.oracle, opt.order);
    } catch (const GenericityError& e) {
        throw StageError("invariants", ExitCode::GenericityFailure, e.what());
    } catch (const std::domain_error& e) {
        throw StageError("invariants", ExitCode::InputError, e.what());
    }
    rep.cwl = componentwise_linear(ideal, &rep.invariants.betti);
    rep.classification = classify(rep.invariants, rep.cwl.overall);
    const auto& cls = rep.classification;
    if (cls.status == Status::AlmostMaximal)
        rep.cwl.thm45_case = thm45_case(cls.reg_R, cls.r, rep.invariants.betti.at(1, cls.r + 1));
    rep.checks = run_checks(ideal, rep, opt);

    const auto& inv = rep.invariants;
    Json levels = Json::array();
    for (auto s : inv.res_stats.level_sizes) levels.push_back(s);
    rep.timings = Json{{"unit", "work"},
                       {"groebner_pairs", inv.gb_stats.pairs_reduced},
                       {"groebner_reduction_steps", inv.gb_stats.reduction_steps},
                       {"schreyer_level_sizes", levels},
                       {"schreyer_reductions", inv.res_stats.reductions}};
    return rep;
}

RunReport analyze(const AnalyzeInput& input, const AnalyzeOptions& opt)
{
    if (!input.curve.empty()) {
        std::vector<Polynomial> forms;
        try {
            forms = parse_curve_forms(input.curve, opt.characteristic);
        } catch (const std::exception& e) {
            throw StageError("input", ExitCode::InputError, e.what());
        }
        std::optional<Ideal> ideal;
        try {
            ideal = implicitize_curve(forms);
        } catch (const std::invalid_argument& e) {
            throw StageError("implicitize", ExitCode::InputError, e.what());
        }
        Json echo{{"kind", "curve"}, {"forms", Json::array()}};
        for (const auto& f : forms) echo["forms"].push_back(f.to_string());
        AnalyzeOptions o = opt;
        o.variety = true;
        return analyze_ideal(*ideal, std::move(echo), o);
    }
    std::optional<Ideal> ideal;
    try {
        ideal = parse_ideal_file(input.ideal_text,
                                 opt.override_file_char ? std::optional(opt.characteristic) : std::nullopt);
    } catch (const std::exception& e) {
        throw StageError("input", ExitCode::InputError, e.what());
    }
    return analyze_ideal(*ideal, Json{{"kind", "ideal"}, {"text", render_ideal_file(*ideal)}}, opt);
}

Json betti_json(const BettiTable& bt)
{
    Json entries = Json::array();
    for (const auto& [ij, b] : bt.entries()) entries.push_back({ij.first, ij.second, b});
    return Json{{"entries", entries}, {"text", render_betti(bt)}};
}

Json cwl_json(const CWLReport& cwl)
{
    Json per = Json::array();
    for (const auto& d : cwl.per_degree)
        per.push_back({{"d", d.d}, {"num_gens", d.num_gens}, {"reg", d.reg}, {"linear", d.linear}});
    Json range = Json::array();
    if (!cwl.per_degree.empty()) range = {cwl.per_degree.front().d, cwl.per_degree.back().d};
    return Json{{"degrees_checked", range},
                {"per_degree", per},
                {"overall", cwl.overall},
                {"thm45_case", to_string(cwl.thm45_case)}};
}

Json to_json(const RunReport& rep)
{
    const auto& inv = rep.invariants;
    const auto& cls = rep.classification;
    const auto& ring = rep.ring;

    Json hp{{"text", inv.hilbert_poly.to_string()}, {"binomial_coeffs", int_vector(inv.hilbert_poly.binomial_coeffs)}};
    Json artinian = Json::array();
    for (auto h : inv.reduction.artinian_hilbert) artinian.push_back(h);
    Json invariants{{"num_vars", inv.num_vars},
                    {"order", inv.order.name()},
                    {"gb_size", inv.gb_size},
                    {"initial_ideal", inv.initial.to_string(*ring)},
                    {"krull_dim", inv.dimdeg.krull_dim},
                    {"dim", inv.n()},
                    {"codim", inv.e()},
                    {"degree", inv.deg()},
                    {"depth", inv.depth()},
                    {"pdim", inv.homological.pdim},
                    {"reg_R", inv.reg_R()},
                    {"reg_I", inv.reg_R() + 1},
                    {"cohen_macaulay", inv.homological.cohen_macaulay},
                    {"reduction_number", inv.r()},
                    {"artinian_hilbert", artinian},
                    {"hilbert_numerator", int_vector(inv.series.numerator)},
                    {"reduced_numerator", int_vector(inv.series.reduced_numerator)},
                    {"hilbert_polynomial", hp},
                    {"genus", inv.genus},
                    {"gin", inv.gin.gin.to_string(*ring)},
                    {"gin_agreeing", inv.gin.agreeing}};

    Json witness = nullptr;
    if (cls.witness)
        witness = {{"u", monomial_to_string(cls.witness->first, *ring)},
                   {"v", monomial_to_string(cls.witness->second, *ring)}};
    Json predicted = nullptr;
    if (cls.betti_case != BettiCase::None) {
        predicted = {{"determined", cls.predicted.determined}};
        if (cls.predicted.determined) {
            predicted["table"] = betti_json(cls.predicted.table);
        } else {
            Json cs = Json::array();
            for (const auto& c : cls.predicted.constraints)
                cs.push_back({{"i", c.i}, {"difference", c.difference}, {"cap_r", c.cap_r}, {"cap_r1", c.cap_r1}});
            predicted["constraints"] = cs;
        }
    }
    Json classification{{"status", to_string(cls.status)},
                        {"case", to_string(cls.betti_case)},
                        {"e", cls.e},
                        {"r", cls.r},
                        {"n", cls.n},
                        {"deg", cls.deg},
                        {"reg_R", cls.reg_R},
                        {"depth", cls.depth},
                        {"witness", witness},
                        {"predicted", predicted},
                        {"discrepancies", cls.discrepancies}};

    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"details", c.details}});

    return Json{{"schema", 1},
                {"input", rep.input},
                {"seed", rep.seed},
                {"char", rep.characteristic},
                {"invariants", invariants},
                {"betti", betti_json(inv.betti)},
                {"classification", classification},
                {"cwl", cwl_json(rep.cwl)},
                {"checks", checks},
                {"timings", rep.timings}};
}

std::string render_text(const RunReport& rep)
{
    const auto& inv = rep.invariants;
    const auto& cls = rep.classification;
    const auto& ring = rep.ring;
    std::ostringstream os;
    if (rep.input.at("kind") == "curve") {
        os << "curve:";
        const char* sep = " ";
        for (const auto& f : rep.input.at("forms")) {
            os << sep << f.get<std::string>();
            sep = ", ";
        }
        os << "\n";
    } else {
        os << rep.input.at("text").get<std::string>();
    }
    os << "char " << rep.characteristic << ", seed " << rep.seed << "\n\n";
    os << "deg " << inv.deg() << ", codim " << inv.e() << ", dim " << inv.n() << ", r " << inv.r() << ", reg(R) "
       << inv.reg_R() << ", depth " << inv.depth() << ", pdim " << inv.homological.pdim
       << (inv.homological.cohen_macaulay ? ", Cohen-Macaulay" : ", not Cohen-Macaulay") << "\n";
    os << "Hilbert series numerator: " << int_poly_to_string(inv.series.numerator) << "\n";
    os << "Hilbert polynomial: " << inv.hilbert_poly.to_string() << ", genus " << inv.genus << "\n";
    os << "Gin: " << inv.gin.gin.to_string(*ring) << "\n\n";
    os << render_betti(inv.betti) << "\n";
    os << "classification: " << to_string(cls.status);
    if (cls.betti_case != BettiCase::None) os << " (case " << to_string(cls.betti_case) << ")";
    if (cls.witness)
        os << ", u = " << monomial_to_string(cls.witness->first, *ring)
           << ", v = " << monomial_to_string(cls.witness->second, *ring);
    os << "\n";
    for (const auto& d : cls.discrepancies) os << "  discrepancy: " << d << "\n";
    os << "componentwise linear: " << (rep.cwl.overall ? "yes" : "no");
    if (rep.cwl.thm45_case != Thm45Case::NotApplicable) os << " (" << to_string(rep.cwl.thm45_case) << ")";
    os << "\n";
    for (const auto& d : rep.cwl.per_degree)
        os << "  d=" << d.d << ": " << d.num_gens << " generators, reg " << d.reg << (d.linear ? ", linear" : ", not linear")
           << "\n";
    os << "\nchecks:\n";
    for (const auto& c : rep.checks) {
        os << "  " << c.status << std::string(9 - c.status.size(), ' ') << c.name;
        if (c.details.contains("note")) os << "  (" << c.details.at("note").get<std::string>() << ")";
        os << "\n";
    }
    return os.str();
}

// ----------------------------------------------------------------- search

std::string sample_parametrization(const SearchSpace& space, std::uint64_t seed, std::size_t k)
{
    if (!space.candidates.empty()) return space.candidates[k % space.candidates.size()];
    if (space.degree < 1 || space.terms < 1 || space.terms > space.degree + 1 || space.coefficients.empty())
        throw std::invalid_argument("search space needs 1 <= terms <= degree + 1 and a coefficient set");
    Rng rng = Rng(seed).split(k);
    std::string out;
    for (int f = 0; f < 4; ++f) {
        std::vector<int> exps(static_cast<std::size_t>(space.degree) + 1);
        for (int a = 0; a <= space.degree; ++a) exps[static_cast<std::size_t>(a)] = a;
        for (std::size_t i = 0; i < static_cast<std::size_t>(space.terms); ++i)
            std::swap(exps[i], exps[i + rng.uniform(exps.size() - i)]);
        std::vector<int> chosen(exps.begin(), exps.begin() + space.terms);
        std::sort(chosen.rbegin(), chosen.rend());
        if (f) out += ", ";
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            const auto c = space.coefficients[rng.uniform(space.coefficients.size())];
            const int a = chosen[i];
            const int b = space.degree - a;
            std::string term;
            auto power = [](const char* x, int k) { return k == 1 ? std::string(x) : x + ("^" + std::to_string(k)); };
            if (a) term += power("s", a);
            if (a && b) term += "*";
            if (b) term += power("t", b);
            if (i) out += c < 0 ? " - " : " + ";
            else if (c < 0) out += "-";
            const auto mag = c < 0 ? -c : c;
            if (mag != 1) out += std::to_string(mag) + "*";
            out += term;
        }
    }
    return out;
}

namespace {

std::string hit_key(const Json& hit)
{
    return Json{{"e", hit.at("e")}, {"r", hit.at("r")}, {"betti", hit.at("betti")}}.dump();
}

}  // namespace

SearchSummary run_search(const SearchOptions& opt)
{
    std::set<std::string> seen;
    {
        std::ifstream existing(opt.sink);
        std::string line;
        while (std::getline(existing, line))
            if (!trim(line).empty()) seen.insert(hit_key(Json::parse(line)));
    }
    std::ofstream sink(opt.sink, std::ios::app);
    if (!sink) throw std::runtime_error("cannot open sink " + opt.sink);

    std::size_t budget = opt.budget;
    if (!opt.space.candidates.empty()) budget = std::min(budget, opt.space.candidates.size());

    SearchSummary summary;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t k = next++;
            if (k >= budget) return;
            {
                std::lock_guard lock(mu);
                if (failure) return;
            }
            try {
                const auto forms = sample_parametrization(opt.space, opt.seed, k);
                AnalyzeOptions a = opt.analyze;
                a.seed = Rng(opt.seed).split(k).seed();
                std::optional<RunReport> rep;
                try {
                    rep = analyze(AnalyzeInput{"", forms}, a);
                } catch (const StageError&) {
                }
                std::lock_guard lock(mu);
                ++summary.tried;
                if (!rep) {
                    ++summary.rejected;
                    continue;
                }
                if (rep->classification.status != Status::AlmostMaximal) continue;
                Json hit{{"e", rep->classification.e},
                         {"r", rep->classification.r},
                         {"betti", betti_json(rep->invariants.betti).at("entries")},
                         {"cwl", rep->cwl.overall},
                         {"forms", forms},
                         {"seed", a.seed},
                         {"char", rep->characteristic},
                         {"report", to_json(*rep)}};
                if (!seen.insert(hit_key(hit)).second) {
                    ++summary.duplicates;
                    continue;
                }
                sink << hit.dump() << "\n";
                sink.flush();
                if (!sink) throw std::runtime_error("write to sink " + opt.sink + " failed");
                ++summary.hits;
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::max<std::size_t>(1, opt.workers); ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return summary;
}

}  // namespace almax
