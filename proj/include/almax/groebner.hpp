#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "almax/polynomial.hpp"

namespace almax {

class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAGroebnerBasis : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Minimally generated monomial ideal. Generators are kept sorted by degree,
/// then descending degrevlex, so equal ideals compare equal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t num_vars = 0, std::vector<Monomial> generators = {});

    std::size_t num_vars() const { return num_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Monomial& m) const;
    /// Number of degree-d monomials outside the ideal.
    std::uint64_t standard_monomial_count(int d) const;
    int max_generator_degree() const;

    MonomialIdeal operator+(const MonomialIdeal& rhs) const;
    MonomialIdeal operator*(const MonomialIdeal& rhs) const;
    /// (M : m)
    MonomialIdeal quotient(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::string to_string(const Ring& ring) const;

private:
    std::size_t num_vars_;
    std::vector<Monomial> gens_;
};

/// (x_begin, ..., x_{end-1})^d as a monomial ideal.
MonomialIdeal power_of_variables(std::size_t num_vars, std::size_t begin, std::size_t end, int d);

/// Order-tagged generator set; `verified` is set only when the S-pair
/// criterion is known to hold (buchberger output or an explicit check).
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements, bool reduced,
                  bool verified);

    /// Checks the S-pair criterion and marks the set verified when it holds.
    static GroebnerBasis checked(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements);

    const RingPtr& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool reduced() const { return reduced_; }
    bool verified() const { return verified_; }

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
    bool reduced_;
    bool verified_;
};

struct BuchbergerStats {
    std::uint64_t pairs_created = 0;
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t reduction_steps = 0;
};

/// Full division: no term of the result is divisible by a leading monomial of `divisors`.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

/// Buchberger's algorithm, normal selection strategy with sugar, product and
/// chain criteria (Gebauer-Moeller). Pair order is deterministic.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, bool reduce = true,
                         BuchbergerStats* stats = nullptr);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// dim_k (S/I)_d counted as standard monomials of the basis.
std::uint64_t graded_piece_dim(const GroebnerBasis& gb, int d);

/// I intersected with k[x_block, ...], returned over the ring of the remaining variables.
Ideal elimination_ideal(const Ideal& ideal, std::size_t first_block);

class DegenerateImage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Kernel of k[x_0..x_{k-1}] -> k[s,t], x_i -> forms[i]. The forms live in a
/// two-variable ring and share one degree.
Ideal implicitize_curve(std::span<const Polynomial> forms, std::vector<std::string> target_names = {});

bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideals_equal(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f);
Ideal ideal_quotient(const Ideal& ideal, const Ideal& by);
/// (I : J^infinity); throws after 50 quotient rounds without stabilising.
Ideal saturation(const Ideal& ideal, const Ideal& by);
/// Exact quotient a / b; throws if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

Ideal apply_linear_change(const Ideal& ideal, const FpMatrix& m);

struct GenericCoordinates {
    Ideal ideal;
    FpMatrix matrix;
};

GenericCoordinates generic_coordinates(const Ideal& ideal, Rng& rng);

struct GinResult {
    MonomialIdeal gin;
    /// in(g I) for every trial, in trial order.
    std::vector<MonomialIdeal> candidates;
    std::size_t agreeing = 0;
};

/// Degrevlex generic initial ideal, accepted once two independent random
/// coordinate changes agree. Results are over F_p and probabilistic.
GinResult generic_initial_ideal(const Ideal& ideal, std::size_t trials, Rng& rng);

/// x_i m / x_j in M for every generator m, j = max index of m, and i < j.
bool is_stable_monomial_ideal(const MonomialIdeal& m);
/// Same exchange condition for every variable dividing m (Borel-fixed in char 0).
bool is_strongly_stable_monomial_ideal(const MonomialIdeal& m);

Ideal to_ideal(const MonomialIdeal& m, const RingPtr& ring);

}  // namespace almax
