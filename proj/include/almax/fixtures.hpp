#pragma once

#include <string>
#include <vector>

#include "almax/polynomial.hpp"

namespace almax {

/// Binary forms of the two rational quintic and nonic curves in P^3.
inline const std::vector<std::string> kQuinticForms{"s^5", "s^4*t+s^3*t^2", "s*t^4", "t^5"};
inline const std::vector<std::string> kNonicForms{"s^9", "s^4*t^5+s^5*t^4", "s^4*t^5+s^7*t^2", "t^9"};
inline const std::vector<std::string> kQuarticForms{"s^4", "s^3*t", "s*t^3", "t^4"};

/// Parses forms in k[s, t] and returns their implicit ideal in k[x0..x3].
Ideal curve_ideal(const std::vector<std::string>& forms,
                  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);

/// Quintic of genus one in P^3, linked to the rational quartic by two
/// random cubics through it: (f, g) : I_quartic.
Ideal elliptic_quintic_ideal(std::uint32_t characteristic = PrimeField::kDefaultCharacteristic,
                             std::uint64_t seed = 7);

}  // namespace almax
