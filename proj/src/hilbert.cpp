#include "almax/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace almax {

IntPoly trim(IntPoly p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return trim(std::move(c));
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b)
{
    IntPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return trim(std::move(c));
}

IntPoly one_minus_t_pow(int k)
{
    IntPoly p{1};
    for (int i = 0; i < k; ++i) p = poly_mul(p, {1, -1});
    return p;
}

std::int64_t poly_eval(const IntPoly& p, std::int64_t t)
{
    std::int64_t v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
    return v;
}

std::string int_poly_to_string(const IntPoly& p, const std::string& var)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        auto c = p[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        auto a = c < 0 ? -c : c;
        if (k == 0 || a != 1) os << a;
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

std::int64_t binomial(std::int64_t a, std::int64_t k)
{
    if (k < 0) return 0;
    std::int64_t c = 1;
    for (std::int64_t i = 0; i < k; ++i) c = c * (a - i) / (i + 1);
    return c;
}

// -------------------------------------------------------------- numerator

namespace {

IntPoly shift(const IntPoly& p, int k)
{
    if (p.empty()) return p;
    IntPoly q(static_cast<std::size_t>(k), 0);
    q.insert(q.end(), p.begin(), p.end());
    return q;
}

IntPoly numerator_rec(const std::vector<Monomial>& gens, std::size_t n)
{
    // pairwise coprime generators: product of (1 - t^deg)
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        IntPoly p{1};
        for (const auto& g : gens) {
            IntPoly f(static_cast<std::size_t>(g.degree()) + 1, 0);
            f[0] = 1;
            f.back() -= 1;
            p = poly_mul(p, f);
        }
        return p;
    }
    // pivot: the variable dividing the most non-linear generators
    std::vector<int> freq(n, 0);
    for (const auto& g : gens)
        if (g.degree() > 1)
            for (std::size_t i = 0; i < n; ++i)
                if (g[i] > 0) ++freq[i];
    std::size_t x = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    const Monomial xv = Monomial::variable(n, x);

    MonomialIdeal plus(n, gens);
    plus = plus + MonomialIdeal(n, {xv});
    MonomialIdeal colon = MonomialIdeal(n, gens).quotient(xv);
    return poly_add(numerator_rec(plus.generators(), n), shift(numerator_rec(colon.generators(), n), 1));
}

}  // namespace

IntPoly hilbert_numerator(const MonomialIdeal& m)
{
    for (const auto& g : m.generators())
        if (g.is_one()) return {};
    return numerator_rec(m.generators(), m.num_vars());
}

HilbertSeries hilbert_series(const MonomialIdeal& m)
{
    HilbertSeries hs;
    hs.num_vars = m.num_vars();
    hs.numerator = hilbert_numerator(m);
    if (hs.numerator.empty()) {
        hs.unit_ideal = true;
        return hs;
    }
    // divide out (1 - t) while it is a factor
    IntPoly q = hs.numerator;
    std::size_t cancelled = 0;
    while (cancelled < hs.num_vars && poly_eval(q, 1) == 0) {
        // synthetic division by (1 - t) = -(t - 1)
        IntPoly d(q.size() - 1, 0);
        std::int64_t carry = 0;
        for (std::size_t k = q.size() - 1; k >= 1; --k) {
            carry += q[k];
            d[k - 1] = -carry;
        }
        q = trim(std::move(d));
        ++cancelled;
    }
    hs.reduced_numerator = q;
    hs.krull_dim = static_cast<int>(hs.num_vars - cancelled);
    return hs;
}

DimensionDegree dimension_degree(const HilbertSeries& hs)
{
    if (hs.unit_ideal) throw std::domain_error("the unit ideal has no dimension or degree");
    const int n = hs.krull_dim - 1;
    return {hs.krull_dim, n, static_cast<int>(hs.num_vars) - 1 - n, poly_eval(hs.reduced_numerator, 1)};
}

// ----------------------------------------------------- Hilbert polynomial

Rational HilbertPolynomial::operator()(std::int64_t t) const
{
    Rational v = 0;
    for (auto it = power_coeffs.rbegin(); it != power_coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

std::int64_t HilbertPolynomial::at(std::int64_t t) const
{
    auto v = (*this)(t);
    if (v.denominator() != 1) throw std::logic_error("Hilbert polynomial took a non-integer value");
    return v.numerator();
}

std::string HilbertPolynomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = power_coeffs.size(); k-- > 0;) {
        Rational c = power_coeffs[k];
        if (c == Rational(0)) continue;
        bool neg = c < Rational(0);
        Rational a = neg ? -c : c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        bool unit = a == Rational(1);
        if (k == 0 || !unit) {
            if (a.denominator() == 1)
                os << a.numerator();
            else
                os << a.numerator() << "/" << a.denominator();
        }
        if (k > 0) os << (k > 1 ? "T^" + std::to_string(k) : "T");
        first = false;
    }
    return first ? "0" : os.str();
}

HilbertPolynomial hilbert_polynomial_from_binomial(int n, std::vector<std::int64_t> coeffs)
{
    HilbertPolynomial p;
    p.n = n;
    p.binomial_coeffs = std::move(coeffs);
    std::vector<Rational> total(static_cast<std::size_t>(std::max(n, 0)) + 1, Rational(0));
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (std::size_t j = 0; j < p.binomial_coeffs.size(); ++j) {
        if (p.binomial_coeffs[j] == 0) continue;
        // C(T + n - j, n) = prod_{i<n} (T + n - j - i) / n!
        std::vector<Rational> b{Rational(1)};
        for (int i = 0; i < n; ++i) {
            const std::int64_t c = n - static_cast<std::int64_t>(j) - i;
            std::vector<Rational> nb(b.size() + 1, Rational(0));
            for (std::size_t k = 0; k < b.size(); ++k) {
                nb[k] += b[k] * c;
                nb[k + 1] += b[k];
            }
            b = std::move(nb);
        }
        for (std::size_t k = 0; k < b.size(); ++k)
            total[k] += b[k] * p.binomial_coeffs[j] / fact;
    }
    while (!total.empty() && total.back() == Rational(0)) total.pop_back();
    p.power_coeffs = std::move(total);
    return p;
}

HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs)
{
    if (hs.unit_ideal || hs.krull_dim < 1) return hilbert_polynomial_from_binomial(0, {});
    return hilbert_polynomial_from_binomial(hs.krull_dim - 1, hs.reduced_numerator);
}

HilbertPolynomial closed_form_hilbert_polynomial(int e, int r, int reg_R, int n)
{
    // C(T - reg - 1 + n, n) = C(T + n - j, n) with j = reg + 1
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(std::max(r, reg_R + 1)) + 1, 0);
    for (int j = 0; j <= r; ++j) coeffs[static_cast<std::size_t>(j)] += binomial(e - 1 + j, e - 1);
    coeffs[static_cast<std::size_t>(reg_R + 1)] -= 1;
    return hilbert_polynomial_from_binomial(n, std::move(coeffs));
}

std::int64_t arithmetic_genus(const HilbertPolynomial& p)
{
    const std::int64_t sign = p.n % 2 == 0 ? 1 : -1;
    return sign * (p.at(0) - 1);
}

std::int64_t closed_form_genus(int e, int r, int reg_R, int n)
{
    std::int64_t g = 0;
    for (int j = n + 1; j <= r; ++j) g += binomial(e - 1 + j, e - 1) * binomial(j - 1, n);
    g -= binomial(reg_R, n);
    g += (n + 1) % 2 == 0 ? 1 : -1;
    return g;
}

// ---------------------------------------------------------- reduction number

std::vector<std::uint64_t> artinian_reduction(const MonomialIdeal& m, std::size_t e)
{
    const std::size_t n = m.num_vars();
    std::vector<Monomial> gens = m.generators();
    for (std::size_t i = e; i < n; ++i) gens.push_back(Monomial::variable(n, i));
    MonomialIdeal a(n, std::move(gens));
    // Artinian iff a pure power of every x_i, i < e, lies in the ideal
    for (std::size_t i = 0; i < e; ++i) {
        bool found = false;
        for (const auto& g : a.generators())
            if (g[i] == g.degree()) found = true;
        if (!found) return {};
    }
    std::vector<std::uint64_t> h;
    for (int d = 0;; ++d) {
        std::uint64_t c = 0;
        for (const auto& mono : monomials_of_degree(n, d, 0, e))
            if (!a.contains(mono)) ++c;
        if (c == 0) break;
        h.push_back(c);
    }
    return h;
}

ReductionData reduction_number(const Ideal& ideal, std::size_t trials, Rng& rng)
{
    if (trials < 2) throw std::invalid_argument("reduction number needs at least two trials");
    const auto hs = hilbert_series(initial_ideal(buchberger(ideal, MonomialOrder::degrevlex())));
    if (hs.unit_ideal) throw std::domain_error("reduction number of the unit ideal");
    const std::size_t e = hs.num_vars - static_cast<std::size_t>(hs.krull_dim);

    ReductionData out;
    out.seed = rng.seed();
    struct Trial {
        std::vector<std::uint64_t> h;
        FpMatrix m;
    };
    std::vector<Trial> seen;
    const std::size_t budget = 2 * trials;
    for (std::size_t k = 0; k < budget; ++k) {
        Rng child = rng.split(k);
        auto gc = generic_coordinates(ideal, child);
        auto h = artinian_reduction(initial_ideal(buchberger(gc.ideal, MonomialOrder::degrevlex())), e);
        out.trial_values.push_back(h.empty() ? -1 : static_cast<int>(h.size()) - 1);
        seen.push_back({std::move(h), gc.matrix});
        if (k + 1 < trials) continue;
        int best = -1;
        for (int v : out.trial_values)
            if (v >= 0 && (best < 0 || v < best)) best = v;
        if (best < 0) continue;
        auto hits = std::count(out.trial_values.begin(), out.trial_values.end(), best);
        if (hits >= 2) {
            for (std::size_t t = 0; t < seen.size(); ++t)
                if (out.trial_values[t] == best) {
                    out.r = best;
                    out.artinian_hilbert = seen[t].h;
                    out.matrix = seen[t].m;
                    break;
                }
            return out;
        }
    }
    std::string msg = "reduction number unstable across trials:";
    for (int v : out.trial_values) msg += " " + std::to_string(v);
    throw GenericityError(msg);
}

}  // namespace almax
