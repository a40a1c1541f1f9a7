#include "almax/componentwise.hpp"

#include <future>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace almax {

DegreeComponent degree_component_ideal(const Ideal& ideal, int d)
{
    if (d < 1) throw std::invalid_argument("degree_component_ideal: d must be positive");
    const auto& R = ideal.ring();
    const auto& F = R->field();
    const std::size_t N = R->num_vars();
    const auto basis = monomials_of_degree(N, d, 0, N);
    std::unordered_map<Monomial, std::size_t, MonomialHash> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col.emplace(basis[i], i);

    const auto gb = buchberger(ideal, MonomialOrder::degrevlex());
    std::vector<Polynomial> rows;
    for (const auto& g : gb.elements()) {
        const int dg = g.total_degree();
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(N, d - dg, 0, N)) rows.push_back(g.mul_term(m, FieldElement{1}));
    }

    FpMatrix mat(F, rows.size(), basis.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& t : rows[i].terms()) mat(i, col.at(t.monomial)) = t.coeff;
    const auto pivots = mat.rref();

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::vector<Term> terms;
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (mat(i, c).value != 0) terms.push_back({basis[c], mat(i, c)});
        gens.push_back(Polynomial::from_sorted_terms(R, std::move(terms), MonomialOrder::degrevlex()));
    }
    const bool zero = gens.empty();
    return {Ideal(R, std::move(gens)), d, zero};
}

LinearityResult has_linear_resolution(const Ideal& ideal)
{
    LinearityResult out;
    if (ideal.is_zero()) return out;
    out.betti = betti_numbers(ideal);
    out.reg = out.betti.reg() + 1;
    int deg = -1;
    for (const auto& [ij, b] : out.betti.entries()) {
        if (ij.first != 1) continue;
        if (deg != -1 && deg != ij.second + 1) return out;
        deg = ij.second + 1;
    }
    out.degree = deg;
    out.linear = deg != -1 && out.reg == deg;
    return out;
}

std::string to_string(Thm45Case c)
{
    switch (c) {
    case Thm45Case::AI: return "a-i";
    case Thm45Case::AII: return "a-ii";
    case Thm45Case::AIII: return "a-iii";
    case Thm45Case::B: return "b";
    case Thm45Case::NotApplicable: break;
    }
    return "not-applicable";
}

CWLReport componentwise_linear(const Ideal& ideal, const BettiTable* betti)
{
    CWLReport report;
    if (ideal.is_zero()) return report;
    const BettiTable bt = betti ? *betti : betti_numbers(ideal);
    int lo = -1;
    for (const auto& [ij, b] : bt.entries())
        if (ij.first == 1 && (lo == -1 || ij.second + 1 < lo)) lo = ij.second + 1;
    const int hi = bt.reg() + 1;

    std::vector<std::future<DegreeVerdict>> jobs;
    for (int d = lo; d <= hi; ++d)
        jobs.push_back(std::async(std::launch::async, [&ideal, d] {
            auto comp = degree_component_ideal(ideal, d);
            auto lin = has_linear_resolution(comp.ideal);
            return DegreeVerdict{d, comp.ideal.generators().size(), lin.reg, lin.linear};
        }));
    for (auto& j : jobs) {
        report.per_degree.push_back(j.get());
        report.overall = report.overall && report.per_degree.back().linear;
    }
    return report;
}

MonomialIdeal model_monomial_ideal(int e, int n, int r, const Monomial& u, const Monomial& v)
{
    if (e < 1 || n < 0 || r < 1) throw std::invalid_argument("model_ideal: need e >= 1, n >= 0, r >= 1");
    const auto N = static_cast<std::size_t>(n + e + 1);
    const auto E = static_cast<std::size_t>(e);
    if (N > kMaxVars) throw std::invalid_argument("model_ideal: too many variables");
    if (u.num_vars() != N || v.num_vars() != N) throw std::invalid_argument("model_ideal: u, v must live in n + e + 1 variables");
    if (u.degree() != r || u.degree_in(0, E) != r) throw std::invalid_argument("model_ideal: u must be a degree-r monomial in x_0..x_{e-1}");
    if (v.degree() < 1 || v.degree_in(E, N) != v.degree())
        throw std::invalid_argument("model_ideal: v must be a non-constant monomial in x_e..x_{n+e}");
    return power_of_variables(N, 0, E, r + 1) + MonomialIdeal(N, {u * v});
}

Ideal model_ideal(int e, int n, int r, const Monomial& u, const Monomial& v, std::uint32_t characteristic)
{
    auto m = model_monomial_ideal(e, n, r, u, v);
    return to_ideal(m, make_standard_ring(m.num_vars(), characteristic));
}

std::string ModelInstance::label() const
{
    auto R = make_standard_ring(u.num_vars());
    std::ostringstream os;
    os << "e=" << e << " n=" << n << " r=" << r << " u=" << monomial_to_string(u, *R)
       << " v=" << monomial_to_string(v, *R);
    return os.str();
}

std::vector<ModelInstance> model_sweep(int max_deg_v)
{
    std::vector<ModelInstance> out;
    for (int e = 2; e <= 3; ++e)
        for (int n = 1; n <= 2; ++n)
            for (int r = 1; r <= 3; ++r)
                for (int dv = 1; dv <= max_deg_v; ++dv) {
                    const auto N = static_cast<std::size_t>(n + e + 1);
                    const auto E = static_cast<std::size_t>(e);
                    out.push_back({e, n, r, Monomial::variable(N, 0, r), Monomial::variable(N, E, dv)});
                    Monomial u = Monomial::variable(N, E - 1, r);
                    if (r > 1) u = Monomial::variable(N, 0, 1) * Monomial::variable(N, E - 1, r - 1);
                    Monomial v = Monomial::variable(N, N - 1, dv);
                    if (dv > 1) v = Monomial::variable(N, E, 1) * Monomial::variable(N, N - 1, dv - 1);
                    out.push_back({e, n, r, u, v});
                }
    return out;
}

bool verify_lemma41(const Ideal& ideal)
{
    const auto lin = has_linear_resolution(ideal);
    if (!lin.linear) throw std::invalid_argument("verify_lemma41: ideal has no linear resolution");
    const auto& R = ideal.ring();
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < R->num_vars(); ++i)
        for (const auto& g : ideal.generators()) gens.push_back(g * Polynomial::variable(R, i));
    const auto next = has_linear_resolution(Ideal(R, std::move(gens)));
    return next.linear && next.degree == lin.degree + 1;
}

GinCrosscheck cwl_via_gin_crosscheck(const Ideal& ideal, const BettiTable& betti, std::size_t trials, Rng& rng)
{
    return gin_crosscheck(generic_initial_ideal(ideal, trials, rng).gin, betti, ideal.ring());
}

GinCrosscheck gin_crosscheck(const MonomialIdeal& gin, const BettiTable& betti, const RingPtr& ring)
{
    GinCrosscheck out{gin, false, {}, false, false};
    out.stable = is_stable_monomial_ideal(out.gin);
    out.gin_betti = out.stable ? betti_stable_monomial(out.gin) : betti_numbers(to_ideal(out.gin, ring));
    out.same_betti = out.gin_betti == betti;
    out.verdict = out.stable && out.same_betti;
    return out;
}

}  // namespace almax
