#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "almax/groebner.hpp"

namespace almax {

/// Integer polynomial in t, coefficient k at index k; trailing zeros trimmed.
using IntPoly = std::vector<std::int64_t>;

IntPoly trim(IntPoly p);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
/// (1 - t)^k
IntPoly one_minus_t_pow(int k);
std::int64_t poly_eval(const IntPoly& p, std::int64_t t);
std::string int_poly_to_string(const IntPoly& p, const std::string& var = "t");

/// Binomial coefficient C(a, k) for any integer a, as a polynomial in a.
std::int64_t binomial(std::int64_t a, std::int64_t k);

/// Numerator K(t) of the Hilbert series K(t) / (1 - t)^N of S/M.
IntPoly hilbert_numerator(const MonomialIdeal& m);

struct HilbertSeries {
    IntPoly numerator;
    std::size_t num_vars = 0;
    /// numerator / (1 - t)^(N - krull_dim)
    IntPoly reduced_numerator;
    int krull_dim = 0;
    /// S/I = 0
    bool unit_ideal = false;
};

HilbertSeries hilbert_series(const MonomialIdeal& m);

struct DimensionDegree {
    int krull_dim;
    /// dim X = krull_dim - 1
    int proj_dim;
    /// e = N - 1 - n
    int codim;
    std::int64_t degree;
};

DimensionDegree dimension_degree(const HilbertSeries& hs);

using Rational = boost::rational<std::int64_t>;

/// P(T) = sum_j binomial_coeffs[j] * C(T + n - j, n), also stored in the power basis.
struct HilbertPolynomial {
    int n = 0;
    std::vector<std::int64_t> binomial_coeffs;
    std::vector<Rational> power_coeffs;

    Rational operator()(std::int64_t t) const;
    std::int64_t at(std::int64_t t) const;
    friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b)
    {
        return a.power_coeffs == b.power_coeffs;
    }
    std::string to_string() const;
};

/// Expands sum_j c_j C(T + n - j, n) into the power basis.
HilbertPolynomial hilbert_polynomial_from_binomial(int n, std::vector<std::int64_t> coeffs);
HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs);

/// sum_{j<=r} C(e-1+j, e-1) C(T+n-j, n) - C(T - reg_R - 1 + n, n)
HilbertPolynomial closed_form_hilbert_polynomial(int e, int r, int reg_R, int n);

/// (-1)^n (P(0) - 1)
std::int64_t arithmetic_genus(const HilbertPolynomial& p);

/// sum_{j=n+1}^{r} C(e-1+j, e-1) C(j-1, n) - C(reg_R, n) + (-1)^(n+1)
std::int64_t closed_form_genus(int e, int r, int reg_R, int n);

struct ReductionData {
    int r = 0;
    std::vector<std::uint64_t> artinian_hilbert;
    FpMatrix matrix;
    std::uint64_t seed = 0;
    /// reduction number seen in every trial, -1 when the trial was not a Noether normalization
    std::vector<int> trial_values;
};

/// Artinian h-vector of S/(M + (x_e, ..., x_{N-1})); empty if not Artinian.
std::vector<std::uint64_t> artinian_reduction(const MonomialIdeal& m, std::size_t e);

/// Reduction number via generic Artinian reductions. Accepts the minimum
/// value once two trials attain it; throws GenericityError otherwise.
ReductionData reduction_number(const Ideal& ideal, std::size_t trials, Rng& rng);

}  // namespace almax
