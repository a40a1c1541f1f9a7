#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "almax/field.hpp"
#include "almax/linalg.hpp"

namespace almax {

inline constexpr std::size_t kMaxVars = 16;

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense exponent vector with cached total degree.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars);
    Monomial(std::initializer_list<int> exponents);
    explicit Monomial(std::span<const int> exponents);

    static Monomial variable(std::size_t num_vars, std::size_t index, int power = 1);

    std::size_t num_vars() const { return n_; }
    int degree() const { return static_cast<int>(deg_); }
    int operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, int exponent);

    bool is_one() const { return deg_ == 0; }
    bool divides(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    /// Index of the last variable with positive exponent, or -1 for 1.
    int max_index() const;
    int min_index() const;
    /// Degree in the variables with index in [begin, end).
    int degree_in(std::size_t begin, std::size_t end) const;

    Monomial operator*(const Monomial& rhs) const;
    /// Exact quotient; requires rhs.divides(*this).
    Monomial operator/(const Monomial& rhs) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    std::size_t hash() const;

private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint16_t n_ = 0;
    std::uint32_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial order on k[x_0, ..., x_{N-1}] with x_0 > x_1 > ... > x_{N-1}.
class MonomialOrder {
public:
    enum class Kind { DegRevLex, Lex, Elimination };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    /// Lex on the first `block` variables, ties broken by degrevlex on the rest.
    static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::Elimination, block); }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }
    std::string name() const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
    MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

    Kind kind_;
    std::size_t block_;
};

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t begin = 0);
std::strong_ordering compare_lex(const Monomial& a, const Monomial& b, std::size_t end = kMaxVars);

/// Variable names plus the coefficient field.
class Ring {
public:
    Ring(std::vector<std::string> names, PrimeField field);

    std::size_t num_vars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const PrimeField& field() const { return field_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> names_;
    PrimeField field_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);
/// Ring with variables x0, ..., x{n-1}.
RingPtr make_standard_ring(std::size_t num_vars, std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial monomial;
    FieldElement coeff;
};

/// Sparse polynomial; terms are kept sorted strictly descending in `order()`
/// with no zero coefficients.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::degrevlex());

    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms,
                                 MonomialOrder order = MonomialOrder::degrevlex());
    /// Trusted constructor: terms must already be strictly descending in `order` with nonzero coefficients.
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order);
    static Polynomial constant(RingPtr ring, FieldElement c, MonomialOrder order = MonomialOrder::degrevlex());
    static Polynomial variable(RingPtr ring, std::size_t index, MonomialOrder order = MonomialOrder::degrevlex());
    static Polynomial monomial(RingPtr ring, const Monomial& m, FieldElement c,
                               MonomialOrder order = MonomialOrder::degrevlex());

    const RingPtr& ring() const { return ring_; }
    const PrimeField& field() const { return ring_->field(); }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().monomial; }
    FieldElement leading_coeff() const { return leading_term().coeff; }

    /// Common degree of all terms, if any (the zero polynomial has none).
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }
    int total_degree() const;
    /// Coefficient of m, zero if absent.
    FieldElement coeff(const Monomial& m) const;

    Polynomial with_order(const MonomialOrder& order) const;
    Polynomial scaled(FieldElement c) const;
    Polynomial mul_term(const Monomial& m, FieldElement c) const;
    Polynomial monic() const;
    Polynomial operator-() const;

    /// this += c * m * g, the reduction kernel.
    void add_scaled(const Polynomial& g, const Monomial& m, FieldElement c);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

/// Substitutes x_i -> sum_j M(i, j) x_j. apply(M2) after apply(M1) equals apply(M1 * M2).
Polynomial apply_linear_change(const Polynomial& f, const FpMatrix& m);

/// Homogeneous ideal (or, for elimination inputs, an arbitrary one) given by generators.
class Ideal {
public:
    /// Requires homogeneous generators; zero generators are dropped.
    Ideal(RingPtr ring, std::vector<Polynomial> generators);
    static Ideal inhomogeneous(RingPtr ring, std::vector<Polynomial> generators);
    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    /// (x_0, ..., x_{N-1})
    static Ideal maximal(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_homogeneous() const { return homogeneous_; }

private:
    Ideal(RingPtr ring, std::vector<Polynomial> generators, bool require_homogeneous);

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    bool homogeneous_ = true;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Parses `x0*x2^4 - 3*x1^5`; parentheses and powers of parenthesised
/// expressions are accepted. `line` is only used in error positions.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

/// Number of monomials of degree d in n variables.
std::uint64_t monomial_count(std::size_t n, int d);
/// All degree-d monomials in variables [begin, end) of an N-variable ring,
/// sorted descending in degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d, std::size_t begin = 0,
                                          std::size_t end = kMaxVars);

}  // namespace almax
