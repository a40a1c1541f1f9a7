#include "almax/classifier.hpp"

#include <sstream>

namespace almax {

namespace {

std::string entry_name(int i, int j)
{
    return "beta(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::int64_t beta(const BettiTable& bt, int i, int j)
{
    return static_cast<std::int64_t>(bt.at(i, j));
}

}  // namespace

Invariants compute_invariants(const Ideal& ideal, std::size_t trials, Rng& rng, bool oracle, const MonomialOrder& order)
{
    Invariants inv;
    inv.num_vars = ideal.ring()->num_vars();
    inv.order = order;
    const auto gb = buchberger(ideal, order, true, &inv.gb_stats);
    inv.gb_size = gb.size();
    inv.initial = initial_ideal(gb);
    inv.series = hilbert_series(inv.initial);
    inv.dimdeg = dimension_degree(inv.series);
    inv.hilbert_poly = hilbert_polynomial(inv.series);
    if (inv.dimdeg.krull_dim >= 1) inv.genus = arithmetic_genus(inv.hilbert_poly);
    inv.betti = betti_table(minimalize(free_resolution(ideal, &inv.res_stats)));
    inv.homological = homological_invariants(inv.betti, inv.num_vars, inv.dimdeg.krull_dim);
    if (oracle) inv.oracle_agrees = betti_koszul_oracle(ideal, inv.betti.reg() + 1) == inv.betti;
    Rng rr = rng.split(1);
    inv.reduction = reduction_number(ideal, trials, rr);
    Rng rg = rng.split(2);
    inv.gin = generic_initial_ideal(ideal, trials, rg);
    return inv;
}

std::optional<std::pair<Monomial, Monomial>> check_initial_ideal_shape(const MonomialIdeal& m, int e, int r)
{
    const std::size_t N = m.num_vars();
    const auto E = static_cast<std::size_t>(e);
    if (e < 1 || r < 1 || E >= N) return std::nullopt;
    const auto T = power_of_variables(N, 0, E, r + 1);
    std::vector<Monomial> extra;
    for (const auto& g : m.generators())
        if (!T.contains(g)) extra.push_back(g);
    if (extra.size() != 1 || !(T + MonomialIdeal(N, extra) == m)) return std::nullopt;
    Monomial u(N), v(N);
    for (std::size_t i = 0; i < N; ++i) (i < E ? u : v).set(i, extra[0][i]);
    if (u.degree() != r || v.degree() < 1) return std::nullopt;
    return std::make_pair(u, v);
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::MaximalDegreeACM: return "MaximalDegreeACM";
    case Status::AlmostMaximal: return "AlmostMaximal";
    case Status::Other: break;
    }
    return "Other";
}

std::string to_string(BettiCase c)
{
    switch (c) {
    case BettiCase::A: return "a";
    case BettiCase::B: return "b";
    case BettiCase::C: return "c";
    case BettiCase::None: break;
    }
    return "none";
}

PredictedBetti predicted_betti(BettiCase c, int e, int r, int reg_R, std::optional<bool> cwl)
{
    PredictedBetti p;
    p.r = r;
    p.reg_R = reg_R;
    p.table.set(0, 0, 1);
    auto main_term = [&](int i) { return binomial(e + r, i + r) * binomial(r + i - 1, r); };
    switch (c) {
    case BettiCase::A:
        p.determined = true;
        for (int i = 1; i <= e + 1; ++i) p.table.add(i, r, static_cast<std::uint64_t>(main_term(i) + binomial(e, i - 1)));
        break;
    case BettiCase::B:
        if (cwl.value_or(false)) {
            p.determined = true;
            for (int i = 1; i <= e + 1; ++i) {
                p.table.add(i, r, static_cast<std::uint64_t>(main_term(i)));
                p.table.add(i, r + 1, static_cast<std::uint64_t>(binomial(e, i - 1)));
            }
            break;
        }
        for (int i = 1; i <= e + 1; ++i)
            p.constraints.push_back({i, main_term(i) - binomial(e, i - 2), main_term(i), binomial(e, i - 2)});
        break;
    case BettiCase::C:
        p.determined = true;
        for (int i = 1; i <= e + 1; ++i) {
            p.table.add(i, r, static_cast<std::uint64_t>(main_term(i)));
            p.table.add(i, reg_R, static_cast<std::uint64_t>(binomial(e, i - 1)));
        }
        break;
    case BettiCase::None: break;
    }
    return p;
}

std::vector<std::string> compare_predicted(const PredictedBetti& p, const BettiTable& actual)
{
    std::vector<std::string> out;
    if (p.determined) {
        std::map<std::pair<int, int>, bool> keys;
        for (const auto& [ij, b] : p.table.entries()) keys[ij] = true;
        for (const auto& [ij, b] : actual.entries()) keys[ij] = true;
        for (const auto& [ij, unused] : keys)
            if (p.table.at(ij.first, ij.second) != actual.at(ij.first, ij.second))
                out.push_back(entry_name(ij.first, ij.second) + ": predicted " +
                              std::to_string(p.table.at(ij.first, ij.second)) + ", computed " +
                              std::to_string(actual.at(ij.first, ij.second)));
        return out;
    }
    const int r = p.r;
    for (const auto& [ij, b] : actual.entries()) {
        const auto [i, j] = ij;
        const bool allowed = (i == 0 && j == 0) || (j == r && i >= 1) || (j == r + 1 && i >= 1);
        if (!allowed) out.push_back(entry_name(i, j) + " outside rows 0, r, r+1");
    }
    if (beta(actual, 0, 0) != 1) out.push_back(entry_name(0, 0) + " != 1");
    for (const auto& c : p.constraints) {
        const auto a = beta(actual, c.i, r);
        const auto b = beta(actual, c.i - 1, r + 1);
        if (a - b != c.difference)
            out.push_back(entry_name(c.i, r) + " - " + entry_name(c.i - 1, r + 1) + " = " + std::to_string(a - b) +
                          ", expected " + std::to_string(c.difference));
        if (a > c.cap_r) out.push_back(entry_name(c.i, r) + " exceeds " + std::to_string(c.cap_r));
        if (b > c.cap_r1) out.push_back(entry_name(c.i - 1, r + 1) + " exceeds " + std::to_string(c.cap_r1));
    }
    return out;
}

Classification classify(const Invariants& inv, std::optional<bool> cwl)
{
    Classification c;
    c.e = inv.e();
    c.r = inv.r();
    c.n = inv.n();
    c.deg = inv.deg();
    c.reg_R = inv.reg_R();
    c.depth = inv.depth();
    const auto bound = binomial(c.e + c.r, c.e);
    c.degree_depth_test = c.deg == bound - 1 && c.depth == c.n;
    c.witness = check_initial_ideal_shape(inv.gin.gin, c.e, c.r);

    auto flag = [&](const std::string& s) { c.discrepancies.push_back(s); };
    if (c.degree_depth_test != c.witness.has_value())
        flag("degree/depth test " + std::string(c.degree_depth_test ? "holds" : "fails") + " but initial ideal shape " +
             (c.witness ? "matches" : "does not match"));

    if (c.deg == bound) {
        c.status = Status::MaximalDegreeACM;
        if (!inv.homological.cohen_macaulay) flag("maximal degree but not arithmetically Cohen-Macaulay");
        for (const auto& [ij, b] : inv.betti.entries())
            if (ij.second != 0 && ij.second != c.r) {
                flag("maximal degree but resolution not " + std::to_string(c.r + 1) + "-linear");
                break;
            }
        return c;
    }
    if (!c.degree_depth_test) return c;

    c.status = Status::AlmostMaximal;
    if (c.witness) {
        const int duv = (c.witness->first * c.witness->second).degree();
        if (c.reg_R != duv - 1)
            flag("reg(R) = " + std::to_string(c.reg_R) + " but deg(uv) - 1 = " + std::to_string(duv - 1));
    }
    if (c.reg_R == c.r) c.betti_case = BettiCase::A;
    else if (c.reg_R == c.r + 1) c.betti_case = BettiCase::B;
    else if (c.reg_R > c.r + 1) c.betti_case = BettiCase::C;
    else flag("reg(R) below the reduction number");
    if (c.betti_case != BettiCase::None) {
        c.predicted = predicted_betti(c.betti_case, c.e, c.r, c.reg_R, cwl);
        for (const auto& m : compare_predicted(c.predicted, inv.betti)) flag("predicted table: " + m);
    }
    return c;
}

Classification classify(const Ideal& ideal, std::size_t trials, Rng& rng)
{
    return classify(compute_invariants(ideal, trials, rng));
}

bool thm45_verdict(int reg_R, int r, std::uint64_t beta_1_rp1)
{
    return !(reg_R == r + 1 && beta_1_rp1 == 0);
}

Thm45Case thm45_case(int reg_R, int r, std::uint64_t beta_1_rp1)
{
    if (reg_R == r) return Thm45Case::AI;
    if (reg_R >= r + 2) return Thm45Case::AIII;
    if (reg_R == r + 1) return beta_1_rp1 == 0 ? Thm45Case::B : Thm45Case::AII;
    return Thm45Case::NotApplicable;
}

Prop43Report check_prop43(const Ideal& ideal, const Invariants& inv)
{
    Prop43Report rep;
    const int r = inv.r();
    rep.subcase = thm45_case(inv.reg_R(), r, inv.betti.at(1, r + 1));
    rep.predicted_linear = rep.subcase != Thm45Case::B;
    const auto comp = degree_component_ideal(ideal, r + 1);
    const auto lin = has_linear_resolution(comp.ideal);
    rep.component_linear = lin.linear;
    rep.passed = rep.component_linear == rep.predicted_linear;

    if (rep.subcase == Thm45Case::AII || rep.subcase == Thm45Case::AIII) {
        const auto hs = hilbert_series(initial_ideal(buchberger(comp.ideal, MonomialOrder::degrevlex())));
        const auto h = homological_invariants(lin.betti, inv.num_vars, hs.krull_dim);
        rep.component_cm = h.cohen_macaulay;
        rep.passed = rep.passed && h.cohen_macaulay;
    }
    if (rep.subcase == Thm45Case::B) {
        const auto moved = apply_linear_change(comp.ideal, inv.reduction.matrix);
        const auto in = initial_ideal(buchberger(moved, MonomialOrder::degrevlex()));
        rep.initial_beta = betti_numbers(to_ideal(in, ideal.ring())).at(1, r + 1);
        bool single = true;
        for (const auto& [ij, b] : inv.betti.entries())
            if (ij.first == 1 && ij.second != r) single = false;
        rep.single_degree = single;
        rep.passed = rep.passed && *rep.initial_beta == 1 && single;
    }
    return rep;
}

BoundsReport check_bounds_prop49(int e, int r, int reg_R, std::int64_t deg)
{
    BoundsReport b;
    b.reg_X = reg_R + 1;
    b.upper = static_cast<int>(binomial(e + r, e)) - e;
    b.slack = {r + 1 - 3, b.reg_X - (r + 1), b.upper - b.reg_X};
    b.degree_bound_holds = b.reg_X <= deg - e + 1;
    b.passed = b.degree_bound_holds;
    for (int s : b.slack) b.passed = b.passed && s >= 0;
    return b;
}

ChiReport check_chi(const BettiTable& betti, int e, int r, int reg_R)
{
    ChiReport c;
    c.observed = chi_over_noether(betti, e);
    const std::size_t len = std::max(c.observed.size(), static_cast<std::size_t>(reg_R) + 2);
    c.observed.resize(len, 0);
    c.stated.assign(len, 0);
    for (int m = 0; m <= r; ++m) c.stated[static_cast<std::size_t>(m)] = (m % 2 ? -1 : 1) * binomial(e + m - 1, e - 1);
    c.signed_pattern = c.stated;
    c.stated[static_cast<std::size_t>(reg_R) + 1] = 1;
    c.signed_pattern[static_cast<std::size_t>(reg_R) + 1] = reg_R % 2 ? -1 : 1;
    c.stated_holds = c.observed == c.stated;
    c.signed_holds = c.observed == c.signed_pattern;
    return c;
}

GenusReport check_genus(const Invariants& inv)
{
    GenusReport g;
    g.direct_poly = inv.hilbert_poly;
    g.closed_poly = closed_form_hilbert_polynomial(inv.e(), inv.r(), inv.reg_R(), inv.n());
    g.poly_match = g.direct_poly == g.closed_poly;
    g.direct = arithmetic_genus(g.direct_poly);
    g.closed = closed_form_genus(inv.e(), inv.r(), inv.reg_R(), inv.n());
    g.flagged = g.direct != g.closed;
    return g;
}

ModelTableReading check_model_table(int e, int r, int deg_uv, const BettiTable& quotient_betti)
{
    // beta_{i,j}(I) sits at beta_{i+1,j-1}(S/I)
    auto build = [&](int top) {
        BettiTable t;
        t.set(0, 0, 1);
        for (int i = 0; i <= top; ++i) {
            auto v = binomial(e + r, i + r + 1) * binomial(r + i, r);
            if (deg_uv == r + 1) v += binomial(e, i);
            t.add(i + 1, r, static_cast<std::uint64_t>(v));
        }
        if (deg_uv > r + 1)
            for (int i = 0; i <= e; ++i) t.add(i + 1, deg_uv - 1, static_cast<std::uint64_t>(binomial(e, i)));
        return t;
    };
    return {build(e - 1) == quotient_betti, build(e) == quotient_betti};
}

}  // namespace almax
