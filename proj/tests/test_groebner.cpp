#include "doctest.h"

#include <map>

#include "almax/groebner.hpp"

using namespace almax;

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens)
{
    std::vector<Polynomial> ps;
    for (auto g : gens) ps.push_back(parse_polynomial(g, R));
    return Ideal(R, ps);
}

// Degree-d membership by linear algebra on the span of m * g.
bool in_span_oracle(const Polynomial& f, const Ideal& I)
{
    auto d = f.homogeneous_degree();
    if (!d) return f.is_zero();
    const auto& R = f.ring();
    auto basis = monomials_of_degree(R->num_vars(), *d);
    std::map<std::vector<int>, std::size_t> col;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<int> e;
        for (std::size_t i = 0; i < R->num_vars(); ++i) e.push_back(basis[k][i]);
        col[e] = k;
    }
    auto index = [&](const Monomial& m) {
        std::vector<int> e;
        for (std::size_t i = 0; i < R->num_vars(); ++i) e.push_back(m[i]);
        return col.at(e);
    };
    std::vector<Polynomial> rows;
    for (const auto& g : I.generators()) {
        int gd = *g.homogeneous_degree();
        if (gd > *d) continue;
        for (const auto& m : monomials_of_degree(R->num_vars(), *d - gd))
            rows.push_back(g.mul_term(m, R->field().one()));
    }
    auto build = [&](bool with_f) {
        FpMatrix M(R->field(), rows.size() + (with_f ? 1 : 0), basis.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& t : rows[r].terms()) M(r, index(t.monomial)) = t.coeff;
        if (with_f)
            for (const auto& t : f.terms()) M(rows.size(), index(t.monomial)) = t.coeff;
        return M.rank();
    };
    return build(true) == build(false);
}

Polynomial random_form(const RingPtr& R, int d, int terms, Rng& rng)
{
    std::vector<Term> ts;
    auto ms = monomials_of_degree(R->num_vars(), d);
    for (int k = 0; k < terms; ++k)
        ts.push_back({ms[rng.uniform(ms.size())], random_field_element(rng, R->field())});
    return Polynomial::from_terms(R, ts);
}

std::vector<Polynomial> forms_of(const RingPtr& R, std::initializer_list<const char*> gens)
{
    std::vector<Polynomial> ps;
    for (auto g : gens) ps.push_back(parse_polynomial(g, R));
    return ps;
}

}  // namespace

TEST_CASE("normal form basics")
{
    auto R = make_standard_ring(3);
    auto o = MonomialOrder::degrevlex();
    auto g = parse_polynomial("x0^2 - x1*x2", R);
    std::vector<Polynomial> G{g};
    CHECK(normal_form(g, G, o).is_zero());
    std::vector<Polynomial> X{parse_polynomial("x0", R)};
    CHECK(normal_form(parse_polynomial("x0^2", R), X, o).is_zero());
    CHECK(normal_form(parse_polynomial("x1^2", R), X, o) == parse_polynomial("x1^2", R));
}

TEST_CASE("small Groebner bases")
{
    auto R = make_standard_ring(4);
    auto gb = buchberger(ideal_of(R, {"x0^2 - x1*x2"}), MonomialOrder::degrevlex());
    REQUIRE(gb.size() == 1);
    CHECK(gb.elements()[0] == parse_polynomial("x0^2 - x1*x2", R));
    CHECK(initial_ideal(gb) == MonomialIdeal(4, {Monomial({2, 0, 0, 0})}));

    auto gb2 = buchberger(ideal_of(R, {"x0^2", "x0*x1", "x1^2"}), MonomialOrder::degrevlex());
    CHECK(gb2.size() == 3);
    CHECK(initial_ideal(gb2) == power_of_variables(4, 0, 2, 2));

    GroebnerBasis unverified(R, MonomialOrder::degrevlex(), {parse_polynomial("x0", R)}, false, false);
    CHECK_THROWS_AS(initial_ideal(unverified), NotAGroebnerBasis);
}

TEST_CASE("buchberger output satisfies the S-pair criterion and is idempotent")
{
    auto R = make_standard_ring(4);
    Rng rng(21);
    for (int k = 0; k < 15; ++k) {
        std::vector<Polynomial> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(random_form(R, 2, 3, rng));
        Ideal I(R, gens);
        for (auto o : {MonomialOrder::degrevlex(), MonomialOrder::lex()}) {
            auto gb = buchberger(I, o);
            auto checked = GroebnerBasis::checked(R, o, gb.elements());
            CHECK(checked.verified());
            CHECK(checked.reduced());
            auto again = buchberger(Ideal(R, gb.elements()), o);
            CHECK(again.elements() == gb.elements());
            for (const auto& g : gens) CHECK(gb.contains(g));
        }
    }
}

TEST_CASE("membership agrees with a linear algebra oracle")
{
    auto R = make_standard_ring(4);
    Rng rng(2);
    for (int k = 0; k < 10; ++k) {
        std::vector<Polynomial> gens;
        for (int j = 0; j < 3; ++j) gens.push_back(random_form(R, 2, 2, rng));
        Ideal I(R, gens);
        auto gb = buchberger(I, MonomialOrder::degrevlex());
        for (int t = 0; t < 10; ++t) {
            Polynomial f = t % 2 ? random_form(R, 3, 3, rng)
                                 : gens[rng.uniform(3)] * random_form(R, 1, 2, rng) +
                                       gens[rng.uniform(3)] * random_form(R, 1, 2, rng);
            CHECK(gb.contains(f) == in_span_oracle(f, I));
        }
        // standard monomial counts match the initial ideal and the oracle dimension
        for (int d = 0; d <= 5; ++d) {
            auto in = initial_ideal(gb);
            CHECK(graded_piece_dim(gb, d) == in.standard_monomial_count(d));
        }
    }
}

TEST_CASE("graded piece dimension")
{
    auto R = make_standard_ring(4);
    CHECK(graded_piece_dim(buchberger(Ideal::zero(R), MonomialOrder::degrevlex()), 2) == 10);
    auto m = buchberger(Ideal::maximal(R), MonomialOrder::degrevlex());
    for (int d = 1; d < 4; ++d) CHECK(graded_piece_dim(m, d) == 0);
}

TEST_CASE("elimination")
{
    auto R = make_ring({"s", "x0", "x1"});
    Ideal I = Ideal::inhomogeneous(R, {parse_polynomial("s - x0", R), parse_polynomial("s^2 - x1", R)});
    auto E = elimination_ideal(I, 1);
    REQUIRE(E.generators().size() == 1);
    auto target = E.ring();
    CHECK(E.generators()[0].monic() == parse_polynomial("x0^2 - x1", target).monic());
}

TEST_CASE("implicitization of a conic and the twisted cubic")
{
    auto S = make_ring({"s", "t"});
    auto conic = implicitize_curve(forms_of(S, {"s^2", "s*t", "t^2"}));
    REQUIRE(conic.generators().size() == 1);
    CHECK(conic.generators()[0].monic() == parse_polynomial("x0*x2 - x1^2", conic.ring()).monic());

    auto cubic = implicitize_curve(forms_of(S, {"s^3", "s^2*t", "s*t^2", "t^3"}));
    CHECK(cubic.generators().size() == 3);

    CHECK_THROWS_AS(implicitize_curve(forms_of(S, {"s^2", "2*s^2", "3*s^2", "s^2"})), DegenerateImage);
    CHECK_THROWS(implicitize_curve(forms_of(S, {"s^2", "s", "t^2", "t^2"})));
}

TEST_CASE("quotients, intersections and saturation")
{
    auto R = make_standard_ring(4);
    auto q = ideal_quotient(ideal_of(R, {"x0^2"}), parse_polynomial("x0", R));
    CHECK(ideals_equal(q, ideal_of(R, {"x0"})));
    CHECK_THROWS(ideal_quotient(ideal_of(R, {"x0^2"}), Polynomial(R)));

    auto m = Ideal::maximal(R);
    auto m2 = buchberger(Ideal(R, {parse_polynomial("x0", R)}), MonomialOrder::degrevlex());
    (void)m2;
    auto cap = intersect(ideal_of(R, {"x0"}), ideal_of(R, {"x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2", "x1*x2",
                                                            "x1*x3", "x2^2", "x2*x3", "x3^2"}));
    CHECK(ideals_equal(cap, ideal_of(R, {"x0^2", "x0*x1", "x0*x2", "x0*x3"})));
    CHECK(ideals_equal(saturation(cap, m), ideal_of(R, {"x0"})));

    auto a = ideal_of(R, {"x0*x1"}), b = ideal_of(R, {"x1*x2"});
    CHECK(ideals_equal(intersect(a, b), ideal_of(R, {"x0*x1*x2"})));
}

TEST_CASE("divide exact")
{
    auto R = make_standard_ring(3);
    auto a = parse_polynomial("x0^2 - x1^2", R), b = parse_polynomial("x0 + x1", R);
    CHECK(divide_exact(a, b) == parse_polynomial("x0 - x1", R));
    CHECK_THROWS(divide_exact(parse_polynomial("x0^2 + x1^2", R), b));
}

TEST_CASE("stability tests")
{
    auto R = make_standard_ring(2);
    CHECK(is_stable_monomial_ideal(power_of_variables(4, 0, 2, 3)));
    CHECK(is_strongly_stable_monomial_ideal(power_of_variables(4, 0, 3, 2)));
    CHECK_FALSE(is_stable_monomial_ideal(MonomialIdeal(2, {Monomial({0, 2})})));
    // stable but not strongly stable
    MonomialIdeal m(3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0}), Monomial({1, 0, 1}),
                        Monomial({0, 1, 1})});
    CHECK(is_stable_monomial_ideal(m));
}

TEST_CASE("generic initial ideal of a Borel-fixed ideal is itself")
{
    auto R = make_standard_ring(3);
    Rng rng(1);
    auto I = ideal_of(R, {"x0^2", "x0*x1", "x1^2"});
    auto gin = generic_initial_ideal(I, 2, rng);
    CHECK(gin.gin == MonomialIdeal(3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({0, 2, 0})}));
    CHECK(gin.agreeing >= 2);
}

TEST_CASE("generic coordinates with the identity")
{
    auto R = make_standard_ring(3);
    auto I = ideal_of(R, {"x0^2 - x1*x2"});
    auto J = apply_linear_change(I, FpMatrix::identity(R->field(), 3));
    CHECK(J.generators() == I.generators());
}
