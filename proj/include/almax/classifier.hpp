#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "almax/componentwise.hpp"

namespace almax {

/// Everything the classifier reads, computed once per ideal.
struct Invariants {
    std::size_t num_vars = 0;
    std::size_t gb_size = 0;
    BuchbergerStats gb_stats;
    ResolutionStats res_stats;
    /// order used for the Groebner basis and the Hilbert series
    MonomialOrder order = MonomialOrder::degrevlex();
    MonomialIdeal initial;
    HilbertSeries series;
    DimensionDegree dimdeg{};
    HilbertPolynomial hilbert_poly;
    std::int64_t genus = 0;
    BettiTable betti;
    HomologicalInvariants homological{};
    ReductionData reduction;
    GinResult gin;
    /// set when the Koszul cross-check ran
    std::optional<bool> oracle_agrees;

    int e() const { return dimdeg.codim; }
    int n() const { return dimdeg.proj_dim; }
    int r() const { return reduction.r; }
    int reg_R() const { return homological.reg; }
    int depth() const { return homological.depth; }
    std::int64_t deg() const { return dimdeg.degree; }
};

Invariants compute_invariants(const Ideal& ideal, std::size_t trials, Rng& rng, bool oracle = false,
                              const MonomialOrder& order = MonomialOrder::degrevlex());

/// (u, v) when the minimal generators are exactly (x_0..x_{e-1})^{r+1} plus
/// one monomial uv with u of degree r in x_0..x_{e-1} and v of positive degree in the rest.
std::optional<std::pair<Monomial, Monomial>> check_initial_ideal_shape(const MonomialIdeal& m, int e, int r);

enum class Status { MaximalDegreeACM, AlmostMaximal, Other };
enum class BettiCase { A, B, C, None };
std::string to_string(Status s);
std::string to_string(BettiCase c);

/// beta_{i,r} - beta_{i-1,r+1} = difference, beta_{i,r} <= cap_r, beta_{i-1,r+1} <= cap_r1
struct BettiConstraint {
    int i;
    std::int64_t difference;
    std::int64_t cap_r;
    std::int64_t cap_r1;
};

struct PredictedBetti {
    bool determined = false;
    BettiTable table;
    int r = 0;
    int reg_R = 0;
    std::vector<BettiConstraint> constraints;
};

/// Full table in cases a and c and in case b when componentwise linear;
/// constraints for case b otherwise.
PredictedBetti predicted_betti(BettiCase c, int e, int r, int reg_R, std::optional<bool> cwl);
/// Human-readable mismatches; empty when the table fits.
std::vector<std::string> compare_predicted(const PredictedBetti& p, const BettiTable& actual);

struct Classification {
    Status status = Status::Other;
    BettiCase betti_case = BettiCase::None;
    int e = 0, r = 0, n = 0;
    std::int64_t deg = 0;
    int reg_R = 0, depth = 0;
    bool degree_depth_test = false;
    std::optional<std::pair<Monomial, Monomial>> witness;
    PredictedBetti predicted;
    std::vector<std::string> discrepancies;
};

Classification classify(const Invariants& inv, std::optional<bool> cwl = std::nullopt);
Classification classify(const Ideal& ideal, std::size_t trials, Rng& rng);

/// Componentwise linear unless reg_R = r + 1 and beta_{1,r+1} = 0.
bool thm45_verdict(int reg_R, int r, std::uint64_t beta_1_rp1);
Thm45Case thm45_case(int reg_R, int r, std::uint64_t beta_1_rp1);

struct Prop43Report {
    Thm45Case subcase = Thm45Case::NotApplicable;
    bool component_linear = false;
    bool predicted_linear = false;
    /// S/I_<r+1> Cohen-Macaulay, checked in sub-cases ii and iii
    std::optional<bool> component_cm;
    /// beta_{1,r+1}(S/in(I_<r+1>)) in generic coordinates, case b only
    std::optional<std::uint64_t> initial_beta;
    /// I generated in degree r + 1, case b only
    std::optional<bool> single_degree;
    bool passed = false;
};

Prop43Report check_prop43(const Ideal& ideal, const Invariants& inv);

struct BoundsReport {
    int reg_X = 0;
    int upper = 0;
    /// slack of 3 <= r+1, r+1 <= reg X, reg X <= C(e+r,e) - e
    std::vector<int> slack;
    bool degree_bound_holds = false;
    bool passed = false;
};

BoundsReport check_bounds_prop49(int e, int r, int reg_R, std::int64_t deg);

struct ChiReport {
    std::vector<std::int64_t> observed;
    /// 1 at reg + 1 as stated
    std::vector<std::int64_t> stated;
    /// (-1)^reg at reg + 1, what the deconvolution of the table actually gives
    std::vector<std::int64_t> signed_pattern;
    bool stated_holds = false;
    bool signed_holds = false;
};

ChiReport check_chi(const BettiTable& betti, int e, int r, int reg_R);

struct GenusReport {
    HilbertPolynomial direct_poly;
    HilbertPolynomial closed_poly;
    bool poly_match = false;
    std::int64_t direct = 0;
    std::int64_t closed = 0;
    /// closed form differs from the direct genus
    bool flagged = false;
};

GenusReport check_genus(const Invariants& inv);

/// Model ideal tables: whether beta_{i,r+1}(I) for 0 <= i < e alone, or for
/// 0 <= i <= e, reproduces the computed table when deg(uv) = r + 1.
struct ModelTableReading {
    bool narrow_matches = false;
    bool wide_matches = false;
};

ModelTableReading check_model_table(int e, int r, int deg_uv, const BettiTable& quotient_betti);

}  // namespace almax
