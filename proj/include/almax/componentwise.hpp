#pragma once

#include <optional>
#include <string>
#include <vector>

#include "almax/resolution.hpp"

namespace almax {

struct DegreeComponent {
    /// RREF basis of I_d in the descending degrevlex monomial basis.
    Ideal ideal;
    int degree;
    /// I_d = 0
    bool zero;
};

DegreeComponent degree_component_ideal(const Ideal& ideal, int d);

struct LinearityResult {
    bool linear = false;
    /// common generator degree, -1 when mixed or zero
    int degree = -1;
    /// reg of the ideal, i.e. reg(S/I) + 1
    int reg = -1;
    BettiTable betti;
};

LinearityResult has_linear_resolution(const Ideal& ideal);

enum class Thm45Case { AI, AII, AIII, B, NotApplicable };
std::string to_string(Thm45Case c);

struct DegreeVerdict {
    int d;
    std::size_t num_gens;
    int reg;
    bool linear;
};

struct CWLReport {
    /// checked degrees, ascending: min generator degree .. reg(I)
    std::vector<DegreeVerdict> per_degree;
    bool overall = true;
    Thm45Case thm45_case = Thm45Case::NotApplicable;
};

/// Direct check of I_<d> for every d from the least generator degree through
/// reg(I). `betti` is the table of S/I when already known.
CWLReport componentwise_linear(const Ideal& ideal, const BettiTable* betti = nullptr);

/// (x_0, ..., x_{e-1})^{r+1} + (uv) in n + e + 1 variables.
MonomialIdeal model_monomial_ideal(int e, int n, int r, const Monomial& u, const Monomial& v);
Ideal model_ideal(int e, int n, int r, const Monomial& u, const Monomial& v,
                  std::uint32_t characteristic = PrimeField::kDefaultCharacteristic);

struct ModelInstance {
    int e, n, r;
    Monomial u, v;
    std::string label() const;
};

/// e in {2, 3}, n in {1, 2}, r in {1, 2, 3}, deg v in 1..max_deg_v, two (u, v) shapes each.
std::vector<ModelInstance> model_sweep(int max_deg_v);

/// Requires a linear resolution of I in degree d; returns whether m I is (d+1)-linear.
bool verify_lemma41(const Ideal& ideal);

struct GinCrosscheck {
    MonomialIdeal gin;
    bool stable = false;
    BettiTable gin_betti;
    bool same_betti = false;
    /// stable and same Betti numbers
    bool verdict = false;
};

GinCrosscheck cwl_via_gin_crosscheck(const Ideal& ideal, const BettiTable& betti, std::size_t trials, Rng& rng);
/// Same verdict from an already computed Gin.
GinCrosscheck gin_crosscheck(const MonomialIdeal& gin, const BettiTable& betti, const RingPtr& ring);

}  // namespace almax
