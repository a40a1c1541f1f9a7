#include "almax/acceptance.hpp"

#include <sstream>

#include "almax/fixtures.hpp"

namespace almax {

namespace {

struct Fixture {
    std::string name;
    Ideal ideal;
    bool variety;
    std::optional<ModelInstance> model;
    Invariants inv;
    CWLReport cwl;
    Classification cls;
};

BettiTable table_of(std::initializer_list<std::tuple<int, int, std::uint64_t>> entries)
{
    BettiTable t;
    for (auto [i, j, b] : entries) t.set(i, j, b);
    return t;
}

struct Suite {
    AcceptanceOptions opt;
    std::vector<Fixture> curves;
    std::vector<Fixture> models;

    Fixture make(std::string name, Ideal ideal, bool variety, std::optional<ModelInstance> model, std::uint64_t tag)
    {
        Rng rng = Rng(opt.seed).split(tag);
        auto inv = compute_invariants(ideal, opt.trials, rng, false);
        auto cwl = componentwise_linear(ideal, &inv.betti);
        auto cls = classify(inv, cwl.overall);
        return Fixture{std::move(name), std::move(ideal), variety, std::move(model), std::move(inv), cwl, cls};
    }

    explicit Suite(const AcceptanceOptions& o) : opt(o)
    {
        const auto p = opt.characteristic;
        curves.push_back(make("quintic", curve_ideal(kQuinticForms, p), true, std::nullopt, 1));
        curves.push_back(make("nonic", curve_ideal(kNonicForms, p), true, std::nullopt, 2));
        curves.push_back(make("elliptic-quintic", elliptic_quintic_ideal(p), true, std::nullopt, 3));
        std::uint64_t tag = 100;
        for (const auto& m : model_sweep(3))
            models.push_back(make(m.label(), model_ideal(m.e, m.n, m.r, m.u, m.v, p), false, m, tag++));
        if (opt.fault == "quintic-betti") curves[0].inv.betti.add(1, 2, 1);
        if (opt.fault == "nonic-betti") curves[1].inv.betti.add(2, 4, 1);
        if (opt.fault == "model-betti") models[0].inv.betti.add(1, models[0].inv.r(), 1);
    }

    std::vector<const Fixture*> all() const
    {
        std::vector<const Fixture*> out;
        for (const auto& f : curves) out.push_back(&f);
        for (const auto& f : models) out.push_back(&f);
        return out;
    }
};

class Failures {
public:
    void require(bool ok, const std::string& what)
    {
        if (!ok) list_.push_back(what);
    }
    bool ok() const { return list_.empty(); }
    const std::vector<std::string>& list() const { return list_; }

private:
    std::vector<std::string> list_;
};

Json failures_json(const Failures& f, Json extra = Json::object())
{
    extra["failures"] = f.list();
    return extra;
}

std::string num(std::int64_t v)
{
    return std::to_string(v);
}

CriterionResult criterion1(const Suite& s)
{
    const auto& q = s.curves[0];
    Failures f;
    f.require(q.inv.deg() == 5, "deg " + num(q.inv.deg()) + " != 5");
    f.require(q.inv.e() == 2, "e " + num(q.inv.e()) + " != 2");
    f.require(q.inv.r() == 2, "r " + num(q.inv.r()) + " != 2");
    f.require(q.inv.depth() == 1, "depth " + num(q.inv.depth()) + " != 1");
    f.require(q.inv.reg_R() == 3, "reg(R) " + num(q.inv.reg_R()) + " != 3");
    const auto expected = table_of({{0, 0, 1}, {1, 2, 4}, {2, 2, 3}, {1, 3, 1}, {2, 3, 2}, {3, 3, 1}});
    f.require(q.inv.betti == expected, "quintic Betti table differs:\n" + render_betti(q.inv.betti));
    return {1, "quintic curve end-to-end", f.ok(), failures_json(f, {{"betti", render_betti(q.inv.betti)}})};
}

CriterionResult criterion2(const Suite& s)
{
    const auto& q = s.curves[0];
    Failures f;
    const auto c3 = degree_component_ideal(q.ideal, 3).ideal;
    const auto l3 = has_linear_resolution(c3);
    f.require(l3.linear, "I_<3> not linear");
    f.require(l3.betti == table_of({{0, 0, 1}, {1, 2, 4}, {2, 2, 3}}), "S/I_<3> table:\n" + render_betti(l3.betti));
    const auto hs3 = hilbert_series(initial_ideal(buchberger(c3, MonomialOrder::degrevlex())));
    f.require(homological_invariants(l3.betti, q.inv.num_vars, hs3.krull_dim).cohen_macaulay, "S/I_<3> not Cohen-Macaulay");

    const auto c4 = degree_component_ideal(q.ideal, 4).ideal;
    const auto b4 = betti_numbers(c4);
    f.require(homological_invariants(b4, q.inv.num_vars, 0).depth == 0, "S/I_<4> depth != 0");
    f.require(b4 == table_of({{0, 0, 1}, {1, 3, 14}, {2, 3, 26}, {3, 3, 17}, {4, 3, 4}}),
              "S/I_<4> table:\n" + render_betti(b4));
    return {2, "quintic degree components", f.ok(),
            failures_json(f, {{"I_<3>", render_betti(l3.betti)}, {"I_<4>", render_betti(b4)}})};
}

CriterionResult criterion3(const Suite& s)
{
    const auto& c = s.curves[1];
    Failures f;
    f.require(c.inv.deg() == 9, "deg " + num(c.inv.deg()) + " != 9");
    f.require(c.inv.r() == 3, "r " + num(c.inv.r()) + " != 3");
    f.require(c.inv.reduction.artinian_hilbert == std::vector<std::uint64_t>{1, 2, 3, 4},
              "Artinian reduction h-vector differs from (1, 2, 3, 4)");
    const auto expected = table_of({{0, 0, 1}, {1, 3, 5}, {2, 3, 3}, {2, 4, 2}, {3, 4, 1}});
    f.require(c.inv.betti == expected, "nonic Betti table differs:\n" + render_betti(c.inv.betti));
    const bool formula = thm45_verdict(c.inv.reg_R(), c.inv.r(), c.inv.betti.at(1, c.inv.r() + 1));
    f.require(!formula, "formula verdict says componentwise linear");
    f.require(!c.cwl.overall, "direct computation says componentwise linear");
    return {3, "nonic curve end-to-end", f.ok(),
            failures_json(f, {{"betti", render_betti(c.inv.betti)}, {"formula", formula}, {"direct", c.cwl.overall}})};
}

CriterionResult criterion4(const Suite& s)
{
    Failures f;
    int instances = 0, almost = 0;
    for (const auto* x : s.all()) {
        ++instances;
        const auto& c = x->cls;
        f.require(c.degree_depth_test == c.witness.has_value(),
                  x->name + ": degree/depth test and initial ideal shape disagree");
        if (c.status != Status::AlmostMaximal) continue;
        ++almost;
        if (c.witness) {
            const int duv = (c.witness->first * c.witness->second).degree();
            f.require(c.reg_R == duv - 1, x->name + ": reg(R) " + num(c.reg_R) + " != deg(uv) - 1 = " + num(duv - 1));
        }
    }
    f.require(s.models.size() >= 20, "model sweep too small");
    return {4, "initial ideal characterization", f.ok(),
            failures_json(f, {{"instances", instances}, {"almost_maximal", almost}})};
}

CriterionResult criterion5(const Suite& s)
{
    Failures f;
    int counts[3] = {0, 0, 0};
    for (const auto* x : s.all()) {
        const auto& c = x->cls;
        if (c.status != Status::AlmostMaximal) continue;
        if (c.betti_case == BettiCase::None) {
            f.require(false, x->name + ": no Betti case");
            continue;
        }
        // case b is checked against the constraints alone
        const auto p = predicted_betti(c.betti_case, c.e, c.r, c.reg_R, std::nullopt);
        for (const auto& m : compare_predicted(p, x->inv.betti)) f.require(false, x->name + ": " + m);
        ++counts[static_cast<int>(c.betti_case)];
    }
    const auto& q = s.curves[0];
    const auto full = predicted_betti(BettiCase::B, 2, 2, 3, true);
    for (const auto& m : compare_predicted(full, q.inv.betti)) f.require(false, "quintic vs full case-b table: " + m);
    for (int k = 0; k < 3; ++k) f.require(counts[k] > 0, "no instance of case " + std::string(1, char('a' + k)));
    return {5, "Betti table cases", f.ok(),
            failures_json(f, {{"case_a", counts[0]}, {"case_b", counts[1]}, {"case_c", counts[2]}})};
}

CriterionResult criterion6(const Suite& s)
{
    Failures f;
    Json per = Json::array();
    for (const auto* x : s.all()) {
        const auto& c = x->cls;
        if (c.status != Status::AlmostMaximal) continue;
        const auto chi = check_chi(x->inv.betti, c.e, c.r, c.reg_R);
        per.push_back({{"fixture", x->name}, {"reg", c.reg_R}, {"stated", chi.stated_holds}, {"signed", chi.signed_holds}});
        std::ostringstream os;
        for (auto v : chi.observed) os << v << " ";
        f.require(chi.stated_holds, x->name + ": chi^S = ( " + os.str() + ") but the stated pattern has 1 at reg+1 = " +
                                        num(c.reg_R + 1));
    }
    return {6, "chi over the Noether normalization", f.ok(), failures_json(f, {{"fixtures", per}})};
}

CriterionResult criterion7(const Suite& s)
{
    Failures f;
    const char* expected[2] = {"5T + 1", "9T - 6"};
    Json per = Json::array();
    for (int k = 0; k < 2; ++k) {
        const auto& x = s.curves[static_cast<std::size_t>(k)];
        const auto g = check_genus(x.inv);
        f.require(g.poly_match, x.name + ": Hilbert polynomial " + g.direct_poly.to_string() + " vs closed form " +
                                    g.closed_poly.to_string());
        f.require(g.direct_poly.to_string() == expected[k], x.name + ": Hilbert polynomial " + g.direct_poly.to_string());
        f.require(g.flagged && g.closed - g.direct == 1,
                  x.name + ": expected the genus flag with difference 1, got " + num(g.closed - g.direct));
        per.push_back({{"fixture", x.name},
                       {"hilbert_polynomial", g.direct_poly.to_string()},
                       {"genus", g.direct},
                       {"closed_form_genus", g.closed},
                       {"flagged", g.flagged}});
    }
    return {7, "Hilbert polynomial and genus", f.ok(), failures_json(f, {{"fixtures", per}})};
}

CriterionResult criterion8(const Suite& s)
{
    Failures f;
    int prop_checked = 0;
    for (const auto* x : s.all()) {
        const auto& c = x->cls;
        if (x->model) f.require(x->cwl.overall, x->name + ": model ideal not componentwise linear");
        if (c.status != Status::AlmostMaximal) continue;
        const bool formula = thm45_verdict(c.reg_R, c.r, x->inv.betti.at(1, c.r + 1));
        f.require(formula == x->cwl.overall, x->name + ": formula verdict " + (formula ? "true" : "false") +
                                                 " vs direct " + (x->cwl.overall ? "true" : "false"));
        const auto p = check_prop43(x->ideal, x->inv);
        ++prop_checked;
        f.require(p.passed, x->name + ": first component check failed in case " + to_string(p.subcase));
    }
    return {8, "componentwise linearity", f.ok(), failures_json(f, {{"first_component_checks", prop_checked}})};
}

CriterionResult criterion9(const Suite& s)
{
    Failures f;
    for (std::size_t k = 0; k < 2; ++k) {
        const auto& x = s.curves[k];
        f.require(betti_koszul_oracle(x.ideal, x.inv.betti.reg() + 1) == x.inv.betti, x.name + ": Koszul oracle differs");
    }
    Rng rng = Rng(s.opt.seed).split(900);
    int randoms = 0;
    for (; randoms < 50; ++randoms) {
        const std::size_t n = 2 + rng.uniform(3);
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng.uniform(5));
        while (static_cast<int>(gens.size()) < count) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<int>(rng.uniform(3)));
            if (m.degree() > 0) gens.push_back(m);
        }
        MonomialIdeal M(n, gens);
        const auto I = to_ideal(M, make_standard_ring(n, s.opt.characteristic));
        const auto bt = betti_numbers(I);
        f.require(bt == betti_koszul_oracle(I, bt.reg() + 1), "random ideal " + M.to_string(*I.ring()) + ": oracle differs");
        f.require(bt.numerator() == hilbert_numerator(M), "random ideal " + M.to_string(*I.ring()) + ": Euler identity");
    }
    for (const auto* x : s.all()) {
        const auto in_betti = betti_numbers(to_ideal(x->inv.initial, x->ideal.ring()));
        f.require(x->inv.betti.dominated_by(in_betti), x->name + ": cancellation bound violated");
        f.require(x->inv.betti.numerator() == x->inv.series.numerator, x->name + ": Euler identity");
    }
    return {9, "oracle equivalence", f.ok(), failures_json(f, {{"random_ideals", randoms}})};
}

CriterionResult criterion10(const Suite& s)
{
    Failures f;
    bool upper_sharp = false, lower_sharp = false;
    Json per = Json::array();
    for (const auto& x : s.curves) {
        const auto& c = x.cls;
        if (c.status != Status::AlmostMaximal) {
            f.require(false, x.name + ": not almost maximal");
            continue;
        }
        const auto b = check_bounds_prop49(c.e, c.r, c.reg_R, c.deg);
        f.require(b.passed, x.name + ": regularity bounds violated");
        if (c.e == 2 && c.r == 2 && b.reg_X == 4 && b.upper == 4) upper_sharp = true;
        if (b.reg_X == c.r + 1) lower_sharp = true;
        per.push_back({{"fixture", x.name}, {"reg_X", b.reg_X}, {"upper", b.upper}, {"slack", b.slack}});
    }
    f.require(upper_sharp, "no fixture with reg(X) = 4 = C(4,2) - 2");
    f.require(lower_sharp, "no fixture with reg(X) = r + 1");
    // model ideals are not varieties; their violations are reported, not counted
    Json outside = Json::array();
    for (const auto& x : s.models) {
        const auto& c = x.cls;
        if (c.status != Status::AlmostMaximal) continue;
        if (!check_bounds_prop49(c.e, c.r, c.reg_R, c.deg).passed) outside.push_back(x.name);
    }
    return {10, "regularity bounds", f.ok(), failures_json(f, {{"fixtures", per}, {"models_violating", outside}})};
}

Json fixture_verdicts(const Suite& s)
{
    Json out = Json::object();
    for (const auto* x : s.all())
        out[x->name] = {{"status", to_string(x->cls.status)},
                        {"case", to_string(x->cls.betti_case)},
                        {"cwl", x->cwl.overall},
                        {"betti", betti_json(x->inv.betti).at("entries")}};
    return out;
}

std::vector<CriterionResult> run_core(const AcceptanceOptions& opt, Json* verdicts)
{
    Suite s(opt);
    std::vector<CriterionResult> out{criterion1(s), criterion2(s), criterion3(s), criterion4(s), criterion5(s),
                                     criterion6(s), criterion7(s), criterion8(s), criterion9(s), criterion10(s)};
    if (verdicts) *verdicts = fixture_verdicts(s);
    return out;
}

Json core_json(const std::vector<CriterionResult>& results)
{
    Json out = Json::array();
    for (const auto& r : results) out.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}});
    return out;
}

CriterionResult criterion11(const AcceptanceOptions& opt, const std::vector<CriterionResult>& first, const Json& verdicts)
{
    Failures f;
    AcceptanceOptions again = opt;
    again.determinism = false;
    const auto second = run_core(again, nullptr);
    f.require(core_json(first).dump() == core_json(second).dump(), "suite output differs between two runs with one seed");

    AnalyzeOptions ao;
    ao.seed = opt.seed;
    ao.characteristic = opt.characteristic;
    ao.trials = opt.trials;
    for (const auto* forms : {&kQuinticForms, &kNonicForms}) {
        std::string joined;
        for (const auto& s : *forms) joined += (joined.empty() ? "" : ", ") + s;
        const auto a = to_json(analyze(AnalyzeInput{"", joined}, ao)).dump();
        const auto b = to_json(analyze(AnalyzeInput{"", joined}, ao)).dump();
        f.require(a == b, "analyze report differs between runs for " + joined);
    }

    Json sensitivity = Json::array();
    AcceptanceOptions other = again;
    other.characteristic = opt.compare_char;
    try {
        Json other_verdicts;
        const auto other_results = run_core(other, &other_verdicts);
        for (std::size_t k = 0; k < first.size(); ++k)
            if (first[k].passed != other_results[k].passed)
                sensitivity.push_back("criterion " + std::to_string(first[k].id) + " " +
                                      (first[k].passed ? "passes" : "fails") + " at " +
                                      std::to_string(opt.characteristic) + " but " +
                                      (other_results[k].passed ? "passes" : "fails") + " at " +
                                      std::to_string(opt.compare_char));
        for (const auto& [name, v] : verdicts.items())
            if (!other_verdicts.contains(name) || other_verdicts.at(name) != v)
                sensitivity.push_back("fixture " + name + " changes verdict at " + std::to_string(opt.compare_char));
    } catch (const std::exception& e) {
        sensitivity.push_back(std::string("run at ") + std::to_string(opt.compare_char) + " failed: " + e.what());
    }
    Json extra{{"compare_char", opt.compare_char}, {"characteristic_sensitivity", sensitivity}};
    return {11, "determinism", f.ok(), failures_json(f, extra)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    Json verdicts;
    auto out = run_core(opt, &verdicts);
    if (opt.determinism) out.push_back(criterion11(opt, out, verdicts));
    return out;
}

Json acceptance_json(const std::vector<CriterionResult>& results, const AcceptanceOptions& opt)
{
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    Json out{{"schema", 1}, {"seed", opt.seed}, {"char", opt.characteristic}, {"trials", opt.trials}};
    if (opt.fault) out["fault"] = *opt.fault;
    out["criteria"] = core_json(results);
    out["passed"] = all;
    return out;
}

std::string render_acceptance(const std::vector<CriterionResult>& results)
{
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << "\n";
        if (!r.passed && r.details.contains("failures"))
            for (const auto& m : r.details.at("failures")) os << "          " << m.get<std::string>() << "\n";
        if (r.details.contains("characteristic_sensitivity"))
            for (const auto& m : r.details.at("characteristic_sensitivity"))
                os << "          characteristic sensitivity: " << m.get<std::string>() << "\n";
    }
    return os.str();
}

}  // namespace almax
