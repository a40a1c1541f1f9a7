#include "doctest.h"

#include <array>
#include <cmath>

#include "almax/field.hpp"
#include "almax/linalg.hpp"

using namespace almax;

TEST_CASE("small field arithmetic")
{
    PrimeField f5(5);
    CHECK(f5.mul(f5.from_int(2), f5.from_int(3)) == f5.one());
    CHECK(f5.inv(f5.from_int(2)) == f5.from_int(3));
    CHECK(f5.inv(f5.one()) == f5.one());
    CHECK(f5.from_int(-1) == f5.from_int(4));
    CHECK_THROWS_AS(f5.inv(f5.zero()), DivisionByZero);
}

TEST_CASE("identities in the default field")
{
    PrimeField F;
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        auto a = random_field_element(rng, F);
        CHECK(F.mul(F.one(), a) == a);
        CHECK(F.add(a, F.sub(F.zero(), a)).is_zero());
        CHECK(F.add(a, F.from_int(F.characteristic() - a.value)).is_zero());
    }
}

TEST_CASE("a * inv(a) = 1 over every nonzero residue of 32003")
{
    PrimeField F;
    for (std::uint32_t a = 1; a < F.characteristic(); ++a) {
        auto x = FieldElement{a};
        REQUIRE(F.mul(x, F.inv(x)) == F.one());
    }
}

TEST_CASE("field axioms on sampled triples")
{
    PrimeField F(32003);
    Rng rng(11);
    for (int k = 0; k < 2000; ++k) {
        auto a = random_field_element(rng, F), b = random_field_element(rng, F), c = random_field_element(rng, F);
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.mul(a, b) == F.mul(b, a));
        if (!a.is_zero()) CHECK(F.div(F.mul(a, b), a) == b);
    }
}

TEST_CASE("rng determinism and uniformity")
{
    Rng a(7), b(7);
    for (int k = 0; k < 100; ++k) CHECK(a.next_u64() == b.next_u64());

    Rng s1(1), s2(2);
    int same = 0;
    for (int k = 0; k < 16; ++k) same += s1.next_u64() == s2.next_u64();
    CHECK(same < 16);

    PrimeField f5(5);
    Rng r(42);
    std::array<int, 5> counts{};
    for (int k = 0; k < 10000; ++k) ++counts[random_field_element(r, f5).value];
    const double sigma = std::sqrt(10000 * 0.2 * 0.8);
    double chi2 = 0;
    for (int c : counts) {
        CHECK(std::abs(c - 2000) < 5 * sigma);
        chi2 += (c - 2000.0) * (c - 2000.0) / 2000.0;
    }
    // 4 degrees of freedom, 99.9% quantile
    CHECK(chi2 < 18.47);
}

TEST_CASE("prime validation")
{
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(32001));
    CHECK_THROWS(PrimeField(10));
    CHECK_NOTHROW(PrimeField(101));
}

TEST_CASE("matrix rank, inverse and kernel")
{
    PrimeField F(101);
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        auto m = random_invertible_matrix(F, 5, rng);
        auto inv = m.inverse();
        REQUIRE(inv);
        CHECK(m * *inv == FpMatrix::identity(F, 5));
    }
    FpMatrix s(F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s(i, j) = F.from_int(static_cast<int>(i + j));
    CHECK(s.rank() == 2);
    CHECK_FALSE(s.inverse());
    auto ker = s.kernel();
    REQUIRE(ker.size() == 1);
    for (std::size_t i = 0; i < 3; ++i) {
        FieldElement acc = F.zero();
        for (std::size_t j = 0; j < 3; ++j) acc = F.add(acc, F.mul(s(i, j), ker[0][j]));
        CHECK(acc.is_zero());
    }
}
