#include "doctest.h"

#include "almax/classifier.hpp"
#include "almax/fixtures.hpp"

using namespace almax;

namespace {

struct Fixture {
    Ideal ideal;
    Invariants inv;
};

const Fixture& quintic()
{
    static const Fixture f = [] {
        Rng rng(0);
        auto I = curve_ideal(kQuinticForms);
        return Fixture{I, compute_invariants(I, 2, rng, true)};
    }();
    return f;
}

const Fixture& nonic()
{
    static const Fixture f = [] {
        Rng rng(0);
        auto I = curve_ideal(kNonicForms);
        return Fixture{I, compute_invariants(I, 2, rng, true)};
    }();
    return f;
}

}  // namespace

TEST_CASE("initial ideal shape")
{
    const std::size_t N = 4;
    auto T = power_of_variables(N, 0, 2, 3);
    auto w = T + MonomialIdeal(N, {Monomial({2, 0, 2, 0})});
    auto uv = check_initial_ideal_shape(w, 2, 2);
    REQUIRE(uv);
    CHECK(uv->first == Monomial({2, 0, 0, 0}));
    CHECK(uv->second == Monomial({0, 0, 2, 0}));
    CHECK_FALSE(check_initial_ideal_shape(T, 2, 2));
    // u of the wrong degree
    CHECK_FALSE(check_initial_ideal_shape(T + MonomialIdeal(N, {Monomial({1, 0, 2, 0})}), 2, 2));
    // two extra generators
    CHECK_FALSE(check_initial_ideal_shape(
        T + MonomialIdeal(N, {Monomial({2, 0, 1, 0}), Monomial({0, 2, 0, 1})}), 2, 2));
    CHECK(check_initial_ideal_shape(quintic().inv.gin.gin, 2, 2));
}

TEST_CASE("curve invariants")
{
    const auto& q = quintic().inv;
    CHECK(q.deg() == 5);
    CHECK(q.e() == 2);
    CHECK(q.n() == 1);
    CHECK(q.r() == 2);
    CHECK(q.depth() == 1);
    CHECK(q.reg_R() == 3);
    CHECK(q.oracle_agrees == std::optional<bool>(true));

    const auto& n = nonic().inv;
    CHECK(n.deg() == 9);
    CHECK(n.r() == 3);
    CHECK(n.reduction.artinian_hilbert == std::vector<std::uint64_t>{1, 2, 3, 4});
    CHECK(n.reg_R() == 4);
    CHECK(n.oracle_agrees == std::optional<bool>(true));
}

TEST_CASE("classification of the curves")
{
    auto c7 = classify(quintic().inv, true);
    CHECK(c7.status == Status::AlmostMaximal);
    CHECK(c7.betti_case == BettiCase::B);
    CHECK(c7.discrepancies.empty());
    REQUIRE(c7.witness);
    CHECK(c7.witness->first.degree() == 2);
    CHECK(c7.witness->second.degree() == 2);
    CHECK(c7.predicted.determined);
    CHECK(c7.predicted.table == quintic().inv.betti);

    auto c8 = classify(nonic().inv, false);
    CHECK(c8.status == Status::AlmostMaximal);
    CHECK(c8.betti_case == BettiCase::B);
    CHECK_FALSE(c8.predicted.determined);
    CHECK(c8.discrepancies.empty());
    REQUIRE(c8.predicted.constraints.size() == 3);
    CHECK(c8.predicted.constraints[1].difference == 3);
}

TEST_CASE("maximal degree")
{
    Rng rng(1);
    auto R = make_standard_ring(4);
    auto c = classify(to_ideal(power_of_variables(4, 0, 2, 2), R), 2, rng);
    CHECK(c.status == Status::MaximalDegreeACM);
    CHECK(c.deg == 3);
    CHECK(c.discrepancies.empty());
}

TEST_CASE("predicted tables")
{
    auto a = predicted_betti(BettiCase::A, 2, 2, 2, std::nullopt);
    CHECK(a.table.row(2) == std::vector<std::uint64_t>{0, 5, 5, 1});
    auto b = predicted_betti(BettiCase::B, 2, 2, 3, true);
    CHECK(b.table.row(2) == std::vector<std::uint64_t>{0, 4, 3, 0});
    CHECK(b.table.row(3) == std::vector<std::uint64_t>{0, 1, 2, 1});
    auto c = predicted_betti(BettiCase::C, 3, 1, 4, std::nullopt);
    CHECK(c.table.row(1) == std::vector<std::uint64_t>{0, 6, 8, 3, 0});
    CHECK(c.table.row(4) == std::vector<std::uint64_t>{0, 1, 3, 3, 1});

    BettiTable wrong = quintic().inv.betti;
    wrong.set(2, 2, 4);
    CHECK_FALSE(compare_predicted(b, wrong).empty());
    auto unknown = predicted_betti(BettiCase::B, 2, 3, 4, std::nullopt);
    CHECK(compare_predicted(unknown, nonic().inv.betti).empty());
    BettiTable broken = nonic().inv.betti;
    broken.set(1, 4, 1);
    CHECK_FALSE(compare_predicted(unknown, broken).empty());
}

TEST_CASE("componentwise formula")
{
    CHECK(thm45_verdict(3, 2, 1));
    CHECK_FALSE(thm45_verdict(4, 3, 0));
    CHECK(thm45_verdict(2, 2, 0));
    CHECK(thm45_case(5, 2, 0) == Thm45Case::AIII);
    CHECK(thm45_case(3, 2, 1) == Thm45Case::AII);
}

TEST_CASE("linearity of the first component")
{
    auto p7 = check_prop43(quintic().ideal, quintic().inv);
    CHECK(p7.subcase == Thm45Case::AII);
    CHECK(p7.component_linear);
    CHECK(p7.component_cm == std::optional<bool>(true));
    CHECK(p7.passed);

    auto p8 = check_prop43(nonic().ideal, nonic().inv);
    CHECK(p8.subcase == Thm45Case::B);
    CHECK_FALSE(p8.component_linear);
    CHECK(p8.initial_beta == std::optional<std::uint64_t>(1));
    CHECK(p8.single_degree == std::optional<bool>(true));
    CHECK(p8.passed);
}

TEST_CASE("regularity bounds")
{
    auto b7 = check_bounds_prop49(2, 2, 3, 5);
    CHECK(b7.passed);
    CHECK(b7.slack == std::vector<int>{0, 1, 0});
    auto b8 = check_bounds_prop49(2, 3, 4, 9);
    CHECK(b8.passed);
    CHECK(b8.upper == 8);
    CHECK(b8.slack == std::vector<int>{1, 1, 3});
    CHECK_FALSE(check_bounds_prop49(2, 2, 4, 5).passed);
}

TEST_CASE("chi over the Noether normalization")
{
    auto c7 = check_chi(quintic().inv.betti, 2, 2, 3);
    CHECK(c7.observed == std::vector<std::int64_t>{1, -2, 3, 0, -1, 0, 0});
    CHECK(c7.signed_holds);
    CHECK_FALSE(c7.stated_holds);
    auto c8 = check_chi(nonic().inv.betti, 2, 3, 4);
    CHECK(c8.signed_holds);
    CHECK(c8.stated_holds);
}

TEST_CASE("genus")
{
    auto g7 = check_genus(quintic().inv);
    CHECK(g7.poly_match);
    CHECK(g7.direct == 0);
    CHECK(g7.closed == 1);
    CHECK(g7.flagged);
    auto g8 = check_genus(nonic().inv);
    CHECK(g8.poly_match);
    CHECK(g8.direct == 7);
    CHECK(g8.closed - g8.direct == 1);
}

TEST_CASE("model tables need the i = e term")
{
    for (const auto& inst : model_sweep(3)) {
        CAPTURE(inst.label());
        const int duv = (inst.u * inst.v).degree();
        auto bt = betti_numbers(model_ideal(inst.e, inst.n, inst.r, inst.u, inst.v));
        auto reading = check_model_table(inst.e, inst.r, duv, bt);
        CHECK(reading.wide_matches);
        CHECK(reading.narrow_matches == (duv != inst.r + 1));
    }
}

TEST_CASE("model sweep classifies as almost maximal")
{
    int checked = 0;
    for (const auto& inst : model_sweep(3)) {
        CAPTURE(inst.label());
        Rng rng(static_cast<std::uint64_t>(checked));
        auto I = model_ideal(inst.e, inst.n, inst.r, inst.u, inst.v);
        auto inv = compute_invariants(I, 2, rng);
        auto c = classify(inv);
        CHECK(c.status == Status::AlmostMaximal);
        CHECK(c.discrepancies.empty());
        CHECK(c.r == inst.r);
        ++checked;
    }
    CHECK(checked > 20);
}

TEST_CASE("elliptic quintic attains the lower regularity bound")
{
    auto I = elliptic_quintic_ideal();
    auto R = I.ring();
    CHECK(ideals_equal(saturation(I, Ideal::maximal(R)), I));
    Rng rng(2);
    auto inv = compute_invariants(I, 2, rng, true);
    CHECK(inv.deg() == 5);
    CHECK(inv.genus == 1);
    CHECK(inv.r() == 2);
    CHECK(inv.reg_R() == 2);
    CHECK(inv.oracle_agrees == std::optional<bool>(true));
    auto c = classify(inv);
    CHECK(c.status == Status::AlmostMaximal);
    CHECK(c.betti_case == BettiCase::A);
    CHECK(c.discrepancies.empty());
    auto b = check_bounds_prop49(2, 2, inv.reg_R(), inv.deg());
    CHECK(b.passed);
    CHECK(b.slack[1] == 0);
    CHECK(componentwise_linear(I, &inv.betti).overall);
}
