#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace almax {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("inverse of zero in prime field") {}
};

/// Residue in [0, p). The modulus lives in PrimeField, not in the element.
struct FieldElement {
    std::uint32_t value = 0;

    constexpr bool is_zero() const { return value == 0; }
    friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultCharacteristic = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

    std::uint32_t characteristic() const { return p_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    FieldElement from_int(std::int64_t v) const
    {
        auto r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return {static_cast<std::uint32_t>(r)};
    }

    FieldElement add(FieldElement a, FieldElement b) const
    {
        std::uint32_t s = a.value + b.value;
        return {s >= p_ ? s - p_ : s};
    }
    FieldElement sub(FieldElement a, FieldElement b) const
    {
        return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
    }
    FieldElement neg(FieldElement a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
    FieldElement mul(FieldElement a, FieldElement b) const
    {
        return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
    }
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// Symmetric representative in (-p/2, p/2], used for printing.
    std::int64_t signed_value(FieldElement a) const
    {
        return a.value > p_ / 2 ? static_cast<std::int64_t>(a.value) - p_ : a.value;
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Seeded generator threaded explicitly by callers. mt19937_64 is fully
/// specified by the standard, so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound) by rejection sampling.
    std::uint64_t uniform(std::uint64_t bound);

    /// Independent child stream; used to give each trial its own generator.
    Rng split(std::uint64_t tag);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

FieldElement random_field_element(Rng& rng, const PrimeField& field);

}  // namespace almax
