#include "almax/resolution.hpp"

#include <algorithm>
#include <unordered_map>

namespace almax {

// ------------------------------------------------------------- graded maps

GradedMap::GradedMap(RingPtr r, GradedFreeModule src, GradedFreeModule tgt)
    : ring(std::move(r)), source(std::move(src)), target(std::move(tgt))
{
    entries.assign(target.rank(), std::vector<Polynomial>(source.rank(), Polynomial(ring)));
}

bool GradedMap::is_homogeneous() const
{
    for (std::size_t i = 0; i < target.rank(); ++i)
        for (std::size_t j = 0; j < source.rank(); ++j) {
            const auto& e = entries[i][j];
            if (e.is_zero()) continue;
            auto d = e.homogeneous_degree();
            if (!d || *d != source.degrees[j] - target.degrees[i]) return false;
        }
    return true;
}

bool GradedMap::has_unit_entry() const
{
    for (const auto& row : entries)
        for (const auto& e : row)
            if (!e.is_zero() && e.total_degree() == 0) return true;
    return false;
}

GradedMap compose(const GradedMap& a, const GradedMap& b)
{
    if (a.source.degrees != b.target.degrees) throw std::invalid_argument("maps are not composable");
    GradedMap c(a.ring, b.source, a.target);
    for (std::size_t i = 0; i < a.target.rank(); ++i)
        for (std::size_t j = 0; j < b.source.rank(); ++j) {
            Polynomial acc(a.ring);
            for (std::size_t k = 0; k < a.source.rank(); ++k)
                if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc = acc + a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

bool is_zero_map(const GradedMap& m)
{
    for (const auto& row : m.entries)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

FpMatrix graded_component_matrix(const GradedMap& m, int t)
{
    const auto& F = m.ring->field();
    const std::size_t n = m.ring->num_vars();
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> row_index(m.target.rank());
    std::size_t rows = 0;
    for (std::size_t i = 0; i < m.target.rank(); ++i)
        for (const auto& mono : monomials_of_degree(n, t - m.target.degrees[i])) row_index[i][mono] = rows++;
    std::vector<std::pair<std::size_t, Monomial>> cols;
    for (std::size_t j = 0; j < m.source.rank(); ++j)
        for (const auto& mono : monomials_of_degree(n, t - m.source.degrees[j])) cols.push_back({j, mono});
    FpMatrix out(F, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& [j, mu] = cols[c];
        for (std::size_t i = 0; i < m.target.rank(); ++i)
            for (const auto& term : m(i, j).terms()) {
                auto& cell = out(row_index[i].at(term.monomial * mu), c);
                cell = F.add(cell, term.coeff);
            }
    }
    return out;
}

// ----------------------------------------------------------- module terms

namespace {

struct MTerm {
    Monomial m;
    std::uint32_t comp;
    FieldElement c;
};
using MVec = std::vector<MTerm>;

/// Either a Schreyer order (term m e_i keyed by m * lambda_i, then the path
/// of tie-break indices, smaller index larger) or position over term.
struct ModuleOrder {
    bool pot = false;
    std::vector<Monomial> lambda;
    std::vector<std::vector<std::uint32_t>> path;

    std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const
    {
        if (pot) {
            if (ca != cb) return cb <=> ca;
            return compare_degrevlex(a, b);
        }
        auto c = compare_degrevlex(a * lambda[ca], b * lambda[cb]);
        if (c != 0) return c;
        const auto& pa = path[ca];
        const auto& pb = path[cb];
        for (std::size_t k = 0; k < pa.size() && k < pb.size(); ++k)
            if (pa[k] != pb[k]) return pb[k] <=> pa[k];
        return pb.size() <=> pa.size();
    }
    std::strong_ordering compare(const MTerm& a, const MTerm& b) const { return compare(a.m, a.comp, b.m, b.comp); }
};

void maxpy(MVec& p, std::size_t& head, const MVec& g, std::size_t g_start, const Monomial& m, FieldElement c,
           const PrimeField& F, const ModuleOrder& ord, MVec& scratch)
{
    scratch.clear();
    scratch.reserve(p.size() - head + g.size());
    auto a = p.begin() + static_cast<std::ptrdiff_t>(head);
    auto b = g.begin() + static_cast<std::ptrdiff_t>(g_start);
    while (a != p.end() && b != g.end()) {
        Monomial bm = b->m * m;
        auto cmp = ord.compare(a->m, a->comp, bm, b->comp);
        if (cmp > 0) {
            scratch.push_back(*a++);
        } else if (cmp < 0) {
            scratch.push_back({bm, b->comp, F.mul(b->c, c)});
            ++b;
        } else {
            auto s = F.add(a->c, F.mul(b->c, c));
            if (!s.is_zero()) scratch.push_back({a->m, a->comp, s});
            ++a;
            ++b;
        }
    }
    for (; a != p.end(); ++a) scratch.push_back(*a);
    for (; b != g.end(); ++b) scratch.push_back({b->m * m, b->comp, F.mul(b->c, c)});
    p.swap(scratch);
    head = 0;
}

MVec normalize(MVec v, const PrimeField& F, const ModuleOrder& ord)
{
    std::sort(v.begin(), v.end(), [&](const MTerm& a, const MTerm& b) { return ord.compare(a, b) > 0; });
    MVec out;
    for (const auto& t : v) {
        if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
            out.back().c = F.add(out.back().c, t.c);
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(t);
        }
    }
    return out;
}

struct Quotient {
    Monomial m;
    FieldElement c;
    std::size_t index;
};

/// Reduces p by the leading terms of gb; quotients are recorded when asked.
/// With `full`, irreducible terms go to the remainder; otherwise an
/// irreducible leading term stops the reduction.
MVec mreduce(MVec p, const std::vector<MVec>& gb, const std::vector<bool>* active, const PrimeField& F,
             const ModuleOrder& ord, bool full, std::vector<Quotient>* quotients, std::uint64_t* steps)
{
    MVec rem, scratch;
    std::size_t head = 0;
    while (head < p.size()) {
        const MTerm lt = p[head];
        std::size_t found = gb.size();
        for (std::size_t k = 0; k < gb.size(); ++k) {
            if (active && !(*active)[k]) continue;
            const auto& g = gb[k].front();
            if (g.comp == lt.comp && g.m.divides(lt.m)) {
                found = k;
                break;
            }
        }
        if (found < gb.size()) {
            const auto& g = gb[found];
            const Monomial q = lt.m / g.front().m;
            const FieldElement c = F.div(lt.c, g.front().c);
            if (quotients) quotients->push_back({q, c, found});
            ++head;
            maxpy(p, head, g, 1, q, F.neg(c), F, ord, scratch);
            if (steps) ++*steps;
        } else if (full) {
            rem.push_back(lt);
            ++head;
        } else {
            return MVec(p.begin() + static_cast<std::ptrdiff_t>(head), p.end());
        }
    }
    return rem;
}

int term_degree(const MTerm& t, const std::vector<int>& comp_degrees) { return t.m.degree() + comp_degrees[t.comp]; }

GradedMap map_from_columns(const RingPtr& ring, const GradedFreeModule& source, const GradedFreeModule& target,
                           const std::vector<MVec>& cols)
{
    GradedMap m(ring, source, target);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::vector<Term>> per_row(target.rank());
        for (const auto& t : cols[j]) per_row[t.comp].push_back({t.m, t.c});
        for (std::size_t i = 0; i < target.rank(); ++i)
            if (!per_row[i].empty()) m(i, j) = Polynomial::from_terms(ring, std::move(per_row[i]));
    }
    return m;
}

/// Module Buchberger without criteria beyond equal components; returns a
/// Groebner basis (not reduced).
std::vector<MVec> module_groebner(std::vector<MVec> input, const std::vector<int>& comp_degrees, const PrimeField& F,
                                  const ModuleOrder& ord)
{
    std::vector<MVec> gb;
    struct Pair {
        std::size_t i, j;
        int degree;
    };
    std::vector<Pair> pairs;
    std::vector<MVec> pending;
    for (auto& v : input)
        if (!v.empty()) pending.push_back(std::move(v));
    std::sort(pending.begin(), pending.end(), [&](const MVec& a, const MVec& b) {
        return term_degree(a.front(), comp_degrees) < term_degree(b.front(), comp_degrees);
    });

    auto add = [&](MVec h) {
        const std::size_t t = gb.size();
        gb.push_back(std::move(h));
        for (std::size_t i = 0; i < t; ++i)
            if (gb[i].front().comp == gb[t].front().comp) {
                auto l = Monomial::lcm(gb[i].front().m, gb[t].front().m);
                pairs.push_back({i, t, l.degree() + comp_degrees[gb[t].front().comp]});
            }
    };

    std::size_t next_input = 0;
    while (next_input < pending.size() || !pairs.empty()) {
        // lowest degree first; inputs before pairs of the same degree
        int in_deg = next_input < pending.size() ? term_degree(pending[next_input].front(), comp_degrees) : 1 << 30;
        std::size_t best = pairs.size();
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (best == pairs.size() || pairs[k].degree < pairs[best].degree) best = k;
        MVec s;
        if (best == pairs.size() || in_deg <= pairs[best].degree) {
            s = std::move(pending[next_input++]);
        } else {
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
            const auto& a = gb[p.i];
            const auto& b = gb[p.j];
            auto l = Monomial::lcm(a.front().m, b.front().m);
            const Monomial ma = l / a.front().m;
            for (const auto& t : a) s.push_back({t.m * ma, t.comp, F.mul(t.c, b.front().c)});
            std::size_t head = 1;
            MVec scratch;
            maxpy(s, head, b, 1, l / b.front().m, F.neg(a.front().c), F, ord, scratch);
        }
        MVec r = mreduce(std::move(s), gb, nullptr, F, ord, false, nullptr, nullptr);
        if (!r.empty()) add(std::move(r));
    }
    return gb;
}

}  // namespace

GradedMap syzygies(const RingPtr& ring, const GradedFreeModule& target, const std::vector<std::vector<Polynomial>>& gens)
{
    const auto& F = ring->field();
    const std::size_t t = target.rank();
    const std::size_t m = gens.size();
    // (g_i, e_i) in S^{t + m}; components < t come first in position-over-term
    std::vector<int> comp_degrees = target.degrees;
    GradedFreeModule source;
    for (std::size_t i = 0; i < m; ++i) {
        if (gens[i].size() != t) throw std::invalid_argument("generator has the wrong rank");
        std::optional<int> deg;
        for (std::size_t k = 0; k < t; ++k) {
            const auto& p = gens[i][k];
            if (p.is_zero()) continue;
            auto d = p.homogeneous_degree();
            if (!d || (deg && *deg != *d + target.degrees[k])) throw std::invalid_argument("generator is not homogeneous");
            deg = *d + target.degrees[k];
        }
        source.degrees.push_back(deg.value_or(0));
        comp_degrees.push_back(source.degrees.back());
    }
    ModuleOrder ord;
    ord.pot = true;
    std::vector<MVec> input;
    for (std::size_t i = 0; i < m; ++i) {
        MVec v;
        for (std::size_t k = 0; k < t; ++k)
            for (const auto& term : gens[i][k].terms())
                v.push_back({term.monomial, static_cast<std::uint32_t>(k), term.coeff});
        v.push_back({Monomial(ring->num_vars()), static_cast<std::uint32_t>(t + i), F.one()});
        input.push_back(normalize(std::move(v), F, ord));
    }
    auto gb = module_groebner(std::move(input), comp_degrees, F, ord);
    std::vector<MVec> cols;
    GradedFreeModule syz;
    for (const auto& g : gb) {
        if (g.front().comp < t) continue;
        MVec v;
        for (const auto& term : g) v.push_back({term.m, static_cast<std::uint32_t>(term.comp - t), term.c});
        syz.degrees.push_back(term_degree(g.front(), comp_degrees));
        cols.push_back(std::move(v));
    }
    return map_from_columns(ring, syz, source, cols);
}

// ------------------------------------------------------ Schreyer resolution

Resolution free_resolution(const Ideal& ideal, ResolutionStats* stats)
{
    const auto& ring = ideal.ring();
    const auto& F = ring->field();
    const std::size_t n = ring->num_vars();
    ResolutionStats local;
    ResolutionStats& st = stats ? *stats : local;

    ModuleOrder prev;
    prev.lambda = {Monomial(n)};
    prev.path = {{}};
    GradedFreeModule prev_module{{0}};

    std::vector<MVec> level;
    const auto gb = buchberger(ideal, MonomialOrder::degrevlex());
    for (const auto& g : gb.elements()) {
        MVec v;
        for (const auto& t : g.terms()) v.push_back({t.monomial, 0, t.coeff});
        level.push_back(std::move(v));
    }

    Resolution res;
    while (true) {
        // lex-descending leading monomials within each component bound the length
        std::stable_sort(level.begin(), level.end(), [](const MVec& a, const MVec& b) {
            if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
            return compare_lex(a.front().m, b.front().m) > 0;
        });
        st.level_sizes.push_back(level.size());

        ModuleOrder cur;
        GradedFreeModule module;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto& lt = level[i].front();
            module.degrees.push_back(term_degree(lt, prev_module.degrees));
            cur.lambda.push_back(lt.m * prev.lambda[lt.comp]);
            auto p = prev.path[lt.comp];
            p.push_back(static_cast<std::uint32_t>(i));
            cur.path.push_back(std::move(p));
        }
        res.push_back(map_from_columns(ring, module, prev_module, level));
        if (level.empty()) break;

        std::vector<MVec> next;
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto& gi = level[i];
            struct Cand {
                std::size_t j;
                Monomial mij;
            };
            std::vector<Cand> cands;
            for (std::size_t j = i + 1; j < level.size(); ++j)
                if (level[j].front().comp == gi.front().comp) {
                    auto l = Monomial::lcm(gi.front().m, level[j].front().m);
                    cands.push_back({j, l / gi.front().m});
                }
            for (std::size_t a = 0; a < cands.size(); ++a) {
                bool redundant = false;
                for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
                    if (a == b || !cands[b].mij.divides(cands[a].mij)) continue;
                    redundant = !(cands[b].mij == cands[a].mij) || b < a;
                }
                if (redundant) continue;
                const std::size_t j = cands[a].j;
                const auto& gj = level[j];
                const Monomial& mij = cands[a].mij;
                const Monomial mji = Monomial::lcm(gi.front().m, gj.front().m) / gj.front().m;
                const FieldElement ci = gi.front().c, cj = gj.front().c;

                MVec s;
                for (const auto& t : gi) s.push_back({t.m * mij, t.comp, F.mul(t.c, cj)});
                std::size_t head = 1;
                MVec scratch;
                maxpy(s, head, gj, 1, mji, F.neg(ci), F, prev, scratch);
                std::vector<Quotient> qs;
                auto rem = mreduce(std::move(s), level, nullptr, F, prev, true, &qs, &st.reductions);
                if (!rem.empty()) throw std::logic_error("Schreyer step: level is not a Groebner basis");

                MVec syz{{mij, static_cast<std::uint32_t>(i), cj}, {mji, static_cast<std::uint32_t>(j), F.neg(ci)}};
                for (const auto& q : qs) syz.push_back({q.m, static_cast<std::uint32_t>(q.index), F.neg(q.c)});
                syz = normalize(std::move(syz), F, cur);
                if (syz.empty() || syz.front().comp != i || !(syz.front().m == mij))
                    throw std::logic_error("Schreyer step: unexpected syzygy leading term");
                next.push_back(std::move(syz));
            }
        }
        if (next.empty()) break;
        prev = std::move(cur);
        prev_module = std::move(module);
        level = std::move(next);
    }
    return res;
}

// ----------------------------------------------------------- minimalization

namespace {

void erase_row(GradedMap& m, std::size_t r)
{
    m.entries.erase(m.entries.begin() + static_cast<std::ptrdiff_t>(r));
    m.target.degrees.erase(m.target.degrees.begin() + static_cast<std::ptrdiff_t>(r));
}

void erase_col(GradedMap& m, std::size_t c)
{
    for (auto& row : m.entries) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
    m.source.degrees.erase(m.source.degrees.begin() + static_cast<std::ptrdiff_t>(c));
}

bool find_unit(const GradedMap& m, std::size_t& r, std::size_t& c)
{
    for (std::size_t i = 0; i < m.target.rank(); ++i)
        for (std::size_t j = 0; j < m.source.rank(); ++j) {
            const auto& e = m(i, j);
            if (!e.is_zero() && e.total_degree() == 0) {
                r = i;
                c = j;
                return true;
            }
        }
    return false;
}

}  // namespace

Resolution minimalize(Resolution res)
{
    for (std::size_t k = 0; k < res.size(); ++k) {
        std::size_t r, c;
        while (find_unit(res[k], r, c)) {
            auto& d = res[k];
            const auto& F = d.ring->field();
            const FieldElement a = d(r, c).leading_coeff();
            const FieldElement ainv = F.inv(a);
            for (std::size_t j = 0; j < d.source.rank(); ++j) {
                if (j == c || d(r, j).is_zero()) continue;
                const Polynomial factor = d(r, j).scaled(ainv);
                for (std::size_t i = 0; i < d.target.rank(); ++i)
                    if (!d(i, c).is_zero()) d(i, j) = d(i, j) - factor * d(i, c);
            }
            erase_row(d, r);
            erase_col(d, c);
            if (k > 0) erase_col(res[k - 1], r);
            if (k + 1 < res.size()) erase_row(res[k + 1], c);
        }
    }
    while (res.size() > 1 && res.back().source.rank() == 0) res.pop_back();
    return res;
}

// ------------------------------------------------------------ Betti tables

std::uint64_t BettiTable::at(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::uint64_t v)
{
    if (v == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = v;
}

int BettiTable::pdim() const
{
    int p = -1;
    for (const auto& [k, v] : entries_) p = std::max(p, k.first);
    return p;
}

int BettiTable::reg() const
{
    int r = -1;
    for (const auto& [k, v] : entries_) r = std::max(r, k.second);
    return r;
}

int BettiTable::min_row() const
{
    int r = -1;
    for (const auto& [k, v] : entries_)
        if (r < 0 || k.second < r) r = k.second;
    return r;
}

std::uint64_t BettiTable::total(int i) const
{
    std::uint64_t s = 0;
    for (const auto& [k, v] : entries_)
        if (k.first == i) s += v;
    return s;
}

std::vector<std::uint64_t> BettiTable::row(int j) const
{
    std::vector<std::uint64_t> out;
    for (int i = 0; i <= pdim(); ++i) out.push_back(at(i, j));
    return out;
}

IntPoly BettiTable::numerator() const
{
    IntPoly p;
    for (const auto& [k, v] : entries_) {
        const auto deg = static_cast<std::size_t>(k.first + k.second);
        if (p.size() <= deg) p.resize(deg + 1, 0);
        p[deg] += (k.first % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v);
    }
    return trim(std::move(p));
}

bool BettiTable::dominated_by(const BettiTable& other) const
{
    for (const auto& [k, v] : entries_)
        if (v > other.at(k.first, k.second)) return false;
    return true;
}

BettiTable BettiTable::truncated(int cap) const
{
    BettiTable t;
    for (const auto& [k, v] : entries_)
        if (k.second <= cap) t.set(k.first, k.second, v);
    return t;
}

BettiTable betti_table(const Resolution& minimal)
{
    BettiTable bt;
    if (minimal.empty()) throw std::invalid_argument("empty resolution");
    for (const auto& d : minimal)
        if (d.has_unit_entry()) throw NotMinimal("resolution has a unit entry");
    for (int deg : minimal.front().target.degrees) bt.add(0, deg, 1);
    for (std::size_t k = 0; k < minimal.size(); ++k)
        for (int deg : minimal[k].source.degrees) bt.add(static_cast<int>(k + 1), deg - static_cast<int>(k + 1), 1);
    return bt;
}

BettiTable betti_numbers(const Ideal& ideal)
{
    return betti_table(minimalize(free_resolution(ideal)));
}

HomologicalInvariants homological_invariants(const BettiTable& bt, std::size_t num_vars, int krull_dim)
{
    HomologicalInvariants h;
    h.pdim = bt.pdim();
    h.depth = static_cast<int>(num_vars) - h.pdim;
    h.reg = bt.reg();
    h.cohen_macaulay = h.depth == krull_dim;
    return h;
}

// ------------------------------------------------------------ Koszul oracle

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

struct QuotientDegree {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
};

}  // namespace

BettiTable betti_koszul_oracle(const Ideal& ideal, int row_cap)
{
    const auto& ring = ideal.ring();
    const auto& F = ring->field();
    const std::size_t n = ring->num_vars();
    auto gb = buchberger(ideal, MonomialOrder::degrevlex());
    auto in = initial_ideal(gb);

    std::map<int, QuotientDegree> A;
    auto piece = [&](int d) -> const QuotientDegree& {
        auto it = A.find(d);
        if (it != A.end()) return it->second;
        QuotientDegree q;
        if (d >= 0)
            for (const auto& m : monomials_of_degree(n, d))
                if (!in.contains(m)) {
                    q.index[m] = q.basis.size();
                    q.basis.push_back(m);
                }
        return A.emplace(d, std::move(q)).first->second;
    };

    std::map<std::pair<std::size_t, int>, std::size_t> rank_cache;
    // rank of d_i : K_i (x) A_j -> K_{i-1} (x) A_{j+1}
    auto rank = [&](std::size_t i, int j) -> std::size_t {
        if (i == 0 || i > n || j < 0) return 0;
        auto key = std::make_pair(i, j);
        if (auto it = rank_cache.find(key); it != rank_cache.end()) return it->second;
        const auto& src = piece(j);
        const auto& tgt = piece(j + 1);
        auto src_sets = subsets(n, i);
        auto tgt_sets = subsets(n, i - 1);
        std::map<std::vector<std::size_t>, std::size_t> tgt_index;
        for (std::size_t s = 0; s < tgt_sets.size(); ++s) tgt_index[tgt_sets[s]] = s;
        FpMatrix M(F, tgt_sets.size() * tgt.basis.size(), src_sets.size() * src.basis.size());
        std::unordered_map<Monomial, Polynomial, MonomialHash> nf_cache;
        for (std::size_t s = 0; s < src_sets.size(); ++s)
            for (std::size_t b = 0; b < src.basis.size(); ++b) {
                const std::size_t col = s * src.basis.size() + b;
                for (std::size_t p = 0; p < i; ++p) {
                    const std::size_t var = src_sets[s][p];
                    auto rest = src_sets[s];
                    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
                    const std::size_t ts = tgt_index.at(rest);
                    Monomial prod = src.basis[b] * Monomial::variable(n, var);
                    auto it = nf_cache.find(prod);
                    if (it == nf_cache.end())
                        it = nf_cache.emplace(prod, gb.normal_form(Polynomial::monomial(ring, prod, F.one()))).first;
                    const FieldElement sign = p % 2 == 0 ? F.one() : F.neg(F.one());
                    for (const auto& t : it->second.terms()) {
                        auto& cell = M(ts * tgt.basis.size() + tgt.index.at(t.monomial), col);
                        cell = F.add(cell, F.mul(sign, t.coeff));
                    }
                }
            }
        auto r = M.rank();
        rank_cache[key] = r;
        return r;
    };

    BettiTable bt;
    for (int j = 0; j <= row_cap; ++j)
        for (std::size_t i = 0; i <= n; ++i) {
            const auto dim = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i)) *
                             static_cast<std::int64_t>(piece(j).basis.size());
            const auto b = dim - static_cast<std::int64_t>(rank(i, j)) - static_cast<std::int64_t>(rank(i + 1, j - 1));
            if (b < 0) throw std::logic_error("negative Koszul homology dimension");
            bt.set(static_cast<int>(i), j, static_cast<std::uint64_t>(b));
        }
    return bt;
}

BettiTable betti_stable_monomial(const MonomialIdeal& m)
{
    if (!is_stable_monomial_ideal(m)) throw NotStable("Eliahou-Kervaire needs a stable monomial ideal");
    BettiTable bt;
    bool unit = false;
    for (const auto& u : m.generators())
        if (u.is_one()) unit = true;
    if (unit) return bt;
    bt.set(0, 0, 1);
    for (const auto& u : m.generators()) {
        const int top = u.max_index();
        for (int i = 0; i <= top; ++i)
            bt.add(i + 1, u.degree() - 1, static_cast<std::uint64_t>(binomial(top, i)));
    }
    return bt;
}

std::vector<std::int64_t> chi_statistics(const BettiTable& bt)
{
    std::vector<std::int64_t> chi;
    const int top = bt.pdim() + bt.reg();
    for (int m = 0; m <= top; ++m) {
        std::int64_t v = 0;
        for (int j = 0; j <= m; ++j) v += (j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(bt.at(m - j, j));
        chi.push_back(v);
    }
    return chi;
}

std::vector<std::int64_t> chi_over_noether(const BettiTable& bt, int e)
{
    auto chi0 = chi_statistics(bt);
    std::vector<std::int64_t> chi(chi0.size(), 0);
    for (std::size_t m = 0; m < chi0.size(); ++m) {
        std::int64_t v = chi0[m];
        for (int j = 1; j <= e && static_cast<std::size_t>(j) <= m; ++j) v -= binomial(e, j) * chi[m - static_cast<std::size_t>(j)];
        chi[m] = v;
    }
    return chi;
}

}  // namespace almax
