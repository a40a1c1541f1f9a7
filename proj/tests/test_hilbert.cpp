#include "doctest.h"

#include "almax/fixtures.hpp"
#include "almax/hilbert.hpp"

using namespace almax;

namespace {

MonomialIdeal initial_of(const Ideal& I) { return initial_ideal(buchberger(I, MonomialOrder::degrevlex())); }

// sum (-1)^i beta_{i,j} t^{i+j} written out from a hand-entered table
IntPoly alternating_sum(const std::vector<std::tuple<int, int, int>>& table)
{
    IntPoly p(16, 0);
    for (auto [i, j, b] : table) p[static_cast<std::size_t>(i + j)] += (i % 2 ? -1 : 1) * b;
    return trim(p);
}

// Hilbert function read off numerator / (1 - t)^N by power series expansion.
std::vector<std::int64_t> series_coeffs(const IntPoly& num, std::size_t nvars, int upto)
{
    std::vector<std::int64_t> out(static_cast<std::size_t>(upto) + 1, 0);
    for (int d = 0; d <= upto; ++d)
        for (std::size_t k = 0; k < num.size() && static_cast<int>(k) <= d; ++k)
            out[static_cast<std::size_t>(d)] +=
                num[k] * binomial(static_cast<std::int64_t>(nvars) - 1 + d - static_cast<std::int64_t>(k),
                                  static_cast<std::int64_t>(nvars) - 1);
    return out;
}

}  // namespace

TEST_CASE("integer binomials accept negative tops")
{
    CHECK(binomial(-1, 1) == -1);
    CHECK(binomial(-1, 2) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(3, -1) == 0);
}

TEST_CASE("numerators of simple ideals")
{
    CHECK(hilbert_numerator(MonomialIdeal(4)) == IntPoly{1});
    for (int e = 1; e <= 3; ++e)
        for (int r = 0; r <= 3; ++r) {
            auto hs = hilbert_series(power_of_variables(static_cast<std::size_t>(e + 2), 0, static_cast<std::size_t>(e), r + 1));
            CHECK(poly_eval(hs.reduced_numerator, 1) == binomial(e + r, e));
            CHECK(hs.krull_dim == 2);
        }
}

TEST_CASE("numerator matches brute-force standard monomial counts")
{
    Rng rng(17);
    for (int k = 0; k < 40; ++k) {
        const std::size_t n = 2 + rng.uniform(3);
        std::vector<Monomial> gens;
        for (int g = 0; g < 1 + static_cast<int>(rng.uniform(5)); ++g) {
            Monomial m(n);
            int deg = 0;
            for (std::size_t i = 0; i < n; ++i) {
                int e = static_cast<int>(rng.uniform(3));
                m.set(i, e);
                deg += e;
            }
            if (deg > 0) gens.push_back(m);
        }
        MonomialIdeal M(n, gens);
        auto coeffs = series_coeffs(hilbert_numerator(M), n, 10);
        for (int d = 0; d <= 10; ++d)
            CHECK(coeffs[static_cast<std::size_t>(d)] == static_cast<std::int64_t>(M.standard_monomial_count(d)));
    }
}

TEST_CASE("curve numerators agree with the published tables")
{
    auto in47 = initial_of(curve_ideal(kQuinticForms));
    auto expected47 = alternating_sum({{0, 0, 1}, {1, 2, 4}, {2, 2, 3}, {1, 3, 1}, {2, 3, 2}, {3, 3, 1}});
    CHECK(hilbert_numerator(in47) == expected47);
    CHECK(expected47 == IntPoly{1, 0, 0, -4, 2, 2, -1});

    auto in48 = initial_of(curve_ideal(kNonicForms));
    auto expected48 = alternating_sum({{0, 0, 1}, {1, 3, 5}, {2, 3, 3}, {2, 4, 2}, {3, 4, 1}});
    CHECK(hilbert_numerator(in48) == expected48);
}

TEST_CASE("dimension and degree")
{
    auto hs0 = hilbert_series(MonomialIdeal(4));
    auto d0 = dimension_degree(hs0);
    CHECK(d0.krull_dim == 4);
    CHECK(d0.degree == 1);

    auto d47 = dimension_degree(hilbert_series(initial_of(curve_ideal(kQuinticForms))));
    CHECK(d47.proj_dim == 1);
    CHECK(d47.codim == 2);
    CHECK(d47.degree == 5);
    auto d48 = dimension_degree(hilbert_series(initial_of(curve_ideal(kNonicForms))));
    CHECK(d48.proj_dim == 1);
    CHECK(d48.codim == 2);
    CHECK(d48.degree == 9);

    auto unit = hilbert_series(MonomialIdeal(3, {Monomial(3)}));
    CHECK(unit.unit_ideal);
    CHECK_THROWS(dimension_degree(unit));
}

TEST_CASE("Hilbert polynomials")
{
    // reduced numerators from the published tables divided by (1 - t)^2
    CHECK(hilbert_polynomial_from_binomial(1, {1, 2, 3, 0, -1}).to_string() == "5T + 1");
    CHECK(hilbert_polynomial_from_binomial(1, {1, 2, 3, 4, 0, -1}).to_string() == "9T - 6");

    auto p47 = hilbert_polynomial(hilbert_series(initial_of(curve_ideal(kQuinticForms))));
    auto p48 = hilbert_polynomial(hilbert_series(initial_of(curve_ideal(kNonicForms))));
    CHECK(p47.to_string() == "5T + 1");
    CHECK(p48.to_string() == "9T - 6");
    CHECK(hilbert_polynomial(hilbert_series(MonomialIdeal(2))).to_string() == "T + 1");

    CHECK(closed_form_hilbert_polynomial(2, 2, 3, 1) == p47);
    CHECK(closed_form_hilbert_polynomial(2, 3, 4, 1) == p48);
}

TEST_CASE("closed-form leading coefficient recovers the degree")
{
    for (int e = 1; e <= 3; ++e)
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; n <= 2; ++n)
                for (int reg = r; reg <= r + 2; ++reg) {
                    auto p = closed_form_hilbert_polynomial(e, r, reg, n);
                    REQUIRE(p.power_coeffs.size() == static_cast<std::size_t>(n) + 1);
                    Rational lead = p.power_coeffs.back() * (n == 2 ? 2 : 1);
                    CHECK(lead == Rational(binomial(e + r, e) - 1));
                }
}

TEST_CASE("Hilbert polynomial equals the Hilbert function past the regularity")
{
    for (const auto* forms : {&kQuinticForms, &kNonicForms}) {
        auto gb = buchberger(curve_ideal(*forms), MonomialOrder::degrevlex());
        auto p = hilbert_polynomial(hilbert_series(initial_ideal(gb)));
        const int reg = forms == &kQuinticForms ? 3 : 4;
        for (int d = reg + 1; d <= reg + 5; ++d) CHECK(p.at(d) == static_cast<std::int64_t>(graded_piece_dim(gb, d)));
    }
}

TEST_CASE("arithmetic genus")
{
    CHECK(arithmetic_genus(hilbert_polynomial_from_binomial(1, {1, 2, 3, 0, -1})) == 0);
    CHECK(arithmetic_genus(hilbert_polynomial_from_binomial(1, {1, 2, 3, 4, 0, -1})) == 7);
    auto cubic = curve_ideal({"s^3", "s^2*t", "s*t^2", "t^3"});
    CHECK(arithmetic_genus(hilbert_polynomial(hilbert_series(initial_of(cubic)))) == 0);
    // the closed form with its trailing sign term is one larger on both curves
    CHECK(closed_form_genus(2, 2, 3, 1) == 1);
    CHECK(closed_form_genus(2, 3, 4, 1) == 8);
}

TEST_CASE("reduction numbers")
{
    Rng rng(0);
    auto r47 = reduction_number(curve_ideal(kQuinticForms), 2, rng);
    CHECK(r47.r == 2);
    CHECK(r47.artinian_hilbert == std::vector<std::uint64_t>{1, 2, 3});
    auto r48 = reduction_number(curve_ideal(kNonicForms), 2, rng);
    CHECK(r48.r == 3);
    CHECK(r48.artinian_hilbert == std::vector<std::uint64_t>{1, 2, 3, 4});

    auto R = make_standard_ring(4);
    auto sq = to_ideal(power_of_variables(4, 0, 2, 2), R);
    CHECK(reduction_number(sq, 2, rng).r == 1);

    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Rng other(seed);
        CHECK(reduction_number(curve_ideal(kQuinticForms), 2, other).r == 2);
    }
    CHECK_THROWS(reduction_number(sq, 1, rng));
}

TEST_CASE("degree bound")
{
    Rng rng(4);
    for (const auto* forms : {&kQuinticForms, &kNonicForms}) {
        auto I = curve_ideal(*forms);
        auto dd = dimension_degree(hilbert_series(initial_of(I)));
        auto r = reduction_number(I, 2, rng).r;
        CHECK(dd.degree <= binomial(dd.codim + r, dd.codim));
        CHECK(dd.degree == binomial(dd.codim + r, dd.codim) - 1);
    }
}

TEST_CASE("Artinian reduction of a non-Noether position is empty")
{
    // x1 never appears as a pure power
    MonomialIdeal m(3, {Monomial({2, 0, 0})});
    CHECK(artinian_reduction(m, 2).empty());
    CHECK(artinian_reduction(power_of_variables(3, 0, 2, 2), 2) == std::vector<std::uint64_t>{1, 2});
}
