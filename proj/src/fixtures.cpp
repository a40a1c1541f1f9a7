#include "almax/fixtures.hpp"

#include "almax/componentwise.hpp"

namespace almax {

Ideal curve_ideal(const std::vector<std::string>& forms, std::uint32_t characteristic)
{
    auto st = make_ring({"s", "t"}, characteristic);
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < forms.size(); ++i) polys.push_back(parse_polynomial(forms[i], st, i + 1));
    return implicitize_curve(polys);
}

Ideal elliptic_quintic_ideal(std::uint32_t characteristic, std::uint64_t seed)
{
    const auto quartic = curve_ideal(kQuarticForms, characteristic);
    const auto& R = quartic.ring();
    const auto cubics = degree_component_ideal(quartic, 3).ideal.generators();
    Rng rng(seed);
    std::vector<Polynomial> ci;
    for (int k = 0; k < 2; ++k) {
        Polynomial f(R);
        for (const auto& g : cubics) f = f + g.scaled(random_field_element(rng, R->field()));
        ci.push_back(f);
    }
    return ideal_quotient(Ideal(R, ci), quartic);
}

}  // namespace almax
