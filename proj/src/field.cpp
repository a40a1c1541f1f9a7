#include "almax/field.hpp"

#include <limits>

namespace almax {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (1u << 31) || !is_prime(p))
        throw std::invalid_argument("characteristic must be a prime below 2^31, got " + std::to_string(p));
}

FieldElement PrimeField::inv(FieldElement a) const
{
    if (a.is_zero()) throw DivisionByZero();
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a.value;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return {static_cast<std::uint32_t>(t)};
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const
{
    FieldElement result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t Rng::uniform(std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("uniform bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

Rng Rng::split(std::uint64_t tag)
{
    // splitmix64 finaliser over (next draw, tag)
    std::uint64_t z = engine_() + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
}

FieldElement random_field_element(Rng& rng, const PrimeField& field)
{
    return {static_cast<std::uint32_t>(rng.uniform(field.characteristic()))};
}

}  // namespace almax
