#include "doctest.h"

#include "almax/componentwise.hpp"
#include "almax/fixtures.hpp"

using namespace almax;

namespace {

Ideal parse_ideal(const RingPtr& R, const std::vector<std::string>& gens)
{
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(g, R));
    return Ideal(R, ps);
}

}  // namespace

TEST_CASE("degree components")
{
    auto R = make_standard_ring(4);
    auto I = parse_ideal(R, {"x0^2", "x0*x1", "x1^2"});
    auto c2 = degree_component_ideal(I, 2);
    CHECK_FALSE(c2.zero);
    CHECK(ideals_equal(c2.ideal, I));
    CHECK(degree_component_ideal(I, 1).zero);
    auto c3 = degree_component_ideal(I, 3);
    CHECK(c3.ideal.generators().size() == 4 * 3 - 2);
    CHECK_THROWS(degree_component_ideal(I, 0));

    auto C = curve_ideal(kQuinticForms);
    auto gb = buchberger(C, MonomialOrder::degrevlex());
    for (int d = 3; d <= 5; ++d) {
        auto comp = degree_component_ideal(C, d);
        CHECK(comp.ideal.generators().size() == binomial(3 + d, 3) - graded_piece_dim(gb, d));
        // m * I_<d> sits inside I_<d+1>
        auto next = degree_component_ideal(C, d + 1);
        std::vector<Polynomial> moved;
        for (std::size_t i = 0; i < 4; ++i)
            for (const auto& g : comp.ideal.generators()) moved.push_back(g * Polynomial::variable(C.ring(), i));
        CHECK(ideal_contains(next.ideal, Ideal(C.ring(), moved)));
    }
    CHECK(degree_component_ideal(C, 3).ideal.generators().size() == 4);
}

TEST_CASE("linear resolutions")
{
    auto R = make_standard_ring(3);
    auto lin = has_linear_resolution(parse_ideal(R, {"x0", "x1"}));
    CHECK(lin.linear);
    CHECK(lin.degree == 1);
    CHECK(lin.reg == 1);
    CHECK_FALSE(has_linear_resolution(parse_ideal(R, {"x0", "x1^2"})).linear);
    // generated in one degree but with a quadratic syzygy
    CHECK_FALSE(has_linear_resolution(parse_ideal(R, {"x0^2", "x1^2"})).linear);

    auto C7 = curve_ideal(kQuinticForms);
    auto l3 = has_linear_resolution(degree_component_ideal(C7, 3).ideal);
    CHECK(l3.linear);
    CHECK(l3.betti.row(2) == std::vector<std::uint64_t>{0, 4, 3});
    CHECK(l3.betti.pdim() == 2);

    auto l4 = has_linear_resolution(degree_component_ideal(C7, 4).ideal);
    CHECK(l4.linear);
    CHECK(l4.betti.row(3) == std::vector<std::uint64_t>{0, 14, 26, 17, 4});

    auto C8 = curve_ideal(kNonicForms);
    auto c4 = degree_component_ideal(C8, 4);
    CHECK(ideals_equal(c4.ideal, C8));
    CHECK_FALSE(has_linear_resolution(c4.ideal).linear);
}

TEST_CASE("componentwise verdicts on the curves")
{
    auto r7 = componentwise_linear(curve_ideal(kQuinticForms));
    CHECK(r7.overall);
    REQUIRE(r7.per_degree.size() == 2);
    CHECK(r7.per_degree[0].d == 3);
    CHECK(r7.per_degree[1].d == 4);

    auto r8 = componentwise_linear(curve_ideal(kNonicForms));
    CHECK_FALSE(r8.overall);
    REQUIRE(r8.per_degree.size() == 2);
    CHECK_FALSE(r8.per_degree[0].linear);
    CHECK(r8.per_degree[0].reg == 5);
    CHECK(to_string(r8.thm45_case) == "not-applicable");
}

TEST_CASE("truncation beyond the regularity stays linear")
{
    for (const auto* forms : {&kQuinticForms, &kNonicForms}) {
        auto I = curve_ideal(*forms);
        const int reg = betti_numbers(I).reg() + 1;
        for (int d = reg; d <= reg + 1; ++d) CHECK(has_linear_resolution(degree_component_ideal(I, d).ideal).linear);
    }
}

TEST_CASE("model ideals")
{
    auto m = model_monomial_ideal(2, 1, 1, Monomial({1, 0, 0, 0}), Monomial({0, 0, 1, 0}));
    CHECK(m == MonomialIdeal(4, {Monomial({2, 0, 0, 0}), Monomial({1, 1, 0, 0}), Monomial({0, 2, 0, 0}),
                                 Monomial({1, 0, 1, 0})}));
    CHECK_THROWS(model_monomial_ideal(2, 1, 2, Monomial({1, 0, 0, 0}), Monomial({0, 0, 1, 0})));
    CHECK_THROWS(model_monomial_ideal(2, 1, 1, Monomial({0, 0, 1, 0}), Monomial({0, 0, 1, 0})));
    CHECK_THROWS(model_monomial_ideal(2, 1, 1, Monomial({1, 0, 0, 0}), Monomial({0, 1, 0, 0})));
    CHECK_THROWS(model_monomial_ideal(2, 1, 1, Monomial({1, 0, 0, 0}), Monomial({0, 0, 0, 0})));
}

TEST_CASE("every model ideal is componentwise linear with reg = deg(uv) - 1")
{
    const auto sweep = model_sweep(3);
    CHECK(sweep.size() == 72);
    for (const auto& inst : sweep) {
        CAPTURE(inst.label());
        auto I = model_ideal(inst.e, inst.n, inst.r, inst.u, inst.v);
        auto bt = betti_numbers(I);
        CHECK(bt.reg() == (inst.u * inst.v).degree() - 1);
        CHECK(componentwise_linear(I, &bt).overall);
    }
}

TEST_CASE("multiplying a linear ideal by the maximal ideal stays linear")
{
    auto R2 = make_standard_ring(2);
    CHECK(verify_lemma41(parse_ideal(R2, {"x0", "x1"})));
    auto R4 = make_standard_ring(4);
    CHECK(verify_lemma41(to_ideal(power_of_variables(4, 0, 2, 2), R4)));
    CHECK(verify_lemma41(degree_component_ideal(curve_ideal(kQuinticForms), 3).ideal));
    CHECK_THROWS(verify_lemma41(curve_ideal(kNonicForms)));
}

TEST_CASE("Gin cross-check")
{
    Rng rng(11);
    auto C7 = curve_ideal(kQuinticForms);
    auto g7 = cwl_via_gin_crosscheck(C7, betti_numbers(C7), 2, rng);
    CHECK(g7.stable);
    CHECK(g7.verdict);
    auto C8 = curve_ideal(kNonicForms);
    auto g8 = cwl_via_gin_crosscheck(C8, betti_numbers(C8), 2, rng);
    CHECK_FALSE(g8.same_betti);
    CHECK_FALSE(g8.verdict);

    auto R = make_standard_ring(4);
    auto borel = to_ideal(power_of_variables(4, 0, 3, 2), R);
    auto gb = cwl_via_gin_crosscheck(borel, betti_numbers(borel), 2, rng);
    CHECK(gb.gin == power_of_variables(4, 0, 3, 2));
    CHECK(gb.verdict);
}
