#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "almax/groebner.hpp"
#include "almax/hilbert.hpp"

namespace almax {

/// Basis element i has degree degrees[i].
struct GradedFreeModule {
    std::vector<int> degrees;
    std::size_t rank() const { return degrees.size(); }
};

/// Homogeneous matrix; column j is the image of source basis element j.
struct GradedMap {
    RingPtr ring;
    GradedFreeModule source;
    GradedFreeModule target;
    /// entries[row][col]
    std::vector<std::vector<Polynomial>> entries;

    GradedMap(RingPtr ring, GradedFreeModule source, GradedFreeModule target);

    const Polynomial& operator()(std::size_t row, std::size_t col) const { return entries[row][col]; }
    Polynomial& operator()(std::size_t row, std::size_t col) { return entries[row][col]; }
    /// entry(i, j) homogeneous of degree source[j] - target[i] or zero
    bool is_homogeneous() const;
    bool has_unit_entry() const;
};

/// target(a) == source(b); returns a * b.
GradedMap compose(const GradedMap& a, const GradedMap& b);
bool is_zero_map(const GradedMap& m);

/// Matrix of the degree-t piece of a map in the degrevlex monomial bases.
FpMatrix graded_component_matrix(const GradedMap& m, int t);

/// d_1, d_2, ...: d_k maps F_k to F_{k-1}, F_0 = S.
using Resolution = std::vector<GradedMap>;

struct ResolutionStats {
    std::vector<std::size_t> level_sizes;
    std::uint64_t reductions = 0;
};

/// Kernel of the map given by the columns `gens` (elements of a free module
/// with the given basis degrees), via a module Groebner basis in
/// position-over-term order.
GradedMap syzygies(const RingPtr& ring, const GradedFreeModule& target, const std::vector<std::vector<Polynomial>>& gens);

/// Schreyer resolution of S/I starting from the reduced degrevlex basis; not minimal in general.
Resolution free_resolution(const Ideal& ideal, ResolutionStats* stats = nullptr);

/// Cancels unit entries (lexicographically smallest (row, column) first) until none remain.
Resolution minimalize(Resolution res);

class NotMinimal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// beta_{i,j} = dim Tor_i(M, k)_{i+j}; zero entries are not stored.
class BettiTable {
public:
    BettiTable() = default;

    std::uint64_t at(int i, int j) const;
    void set(int i, int j, std::uint64_t v);
    void add(int i, int j, std::uint64_t v) { set(i, j, at(i, j) + v); }
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// max column with a nonzero entry, -1 if empty
    int pdim() const;
    /// max row with a nonzero entry, -1 if empty
    int reg() const;
    int min_row() const;
    /// sum_j beta_{i,j}
    std::uint64_t total(int i) const;
    /// entries of row j for columns 0..pdim
    std::vector<std::uint64_t> row(int j) const;

    /// sum (-1)^i beta_{i,j} t^{i+j}
    IntPoly numerator() const;
    /// entrywise <=
    bool dominated_by(const BettiTable& other) const;
    /// restriction to rows j <= cap
    BettiTable truncated(int cap) const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

BettiTable betti_table(const Resolution& minimal);

/// Betti table of S/I through free_resolution and minimalize.
BettiTable betti_numbers(const Ideal& ideal);

struct HomologicalInvariants {
    int pdim;
    int depth;
    int reg;
    bool cohen_macaulay;
};

HomologicalInvariants homological_invariants(const BettiTable& bt, std::size_t num_vars, int krull_dim);

/// beta_{i,j}(S/I) for j <= row_cap from the homology of the Koszul complex on
/// all variables tensored with S/I, one degree at a time.
BettiTable betti_koszul_oracle(const Ideal& ideal, int row_cap);

class NotStable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Eliahou-Kervaire table of S/M for a stable monomial ideal M.
BettiTable betti_stable_monomial(const MonomialIdeal& m);

/// chi_m = sum_{j=0}^m (-1)^j beta_{m-j, j} for m = 0 .. pdim + reg
std::vector<std::int64_t> chi_statistics(const BettiTable& bt);
/// Solves chi^{S_0}_m = sum_{j=0}^e C(e, j) chi^S_{m-j} for chi^S.
std::vector<std::int64_t> chi_over_noether(const BettiTable& bt, int e);

}  // namespace almax
