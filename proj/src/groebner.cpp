#include "almax/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace almax {

namespace {

using TermVec = std::vector<Term>;

/// p[head..] += c * m * g; leaves the result in p with head reset to 0.
void axpy(TermVec& p, std::size_t& head, const TermVec& g, std::size_t g_start, const Monomial& m, FieldElement c,
          const PrimeField& F, const MonomialOrder& order, TermVec& scratch)
{
    scratch.clear();
    scratch.reserve(p.size() - head + g.size());
    auto a = p.begin() + static_cast<std::ptrdiff_t>(head);
    auto b = g.begin() + static_cast<std::ptrdiff_t>(g_start);
    while (a != p.end() && b != g.end()) {
        Monomial bm = b->monomial * m;
        auto cmp = order.compare(a->monomial, bm);
        if (cmp > 0) {
            scratch.push_back(*a++);
        } else if (cmp < 0) {
            scratch.push_back({bm, F.mul(b->coeff, c)});
            ++b;
        } else {
            auto s = F.add(a->coeff, F.mul(b->coeff, c));
            if (!s.is_zero()) scratch.push_back({a->monomial, s});
            ++a;
            ++b;
        }
    }
    for (; a != p.end(); ++a) scratch.push_back(*a);
    for (; b != g.end(); ++b) scratch.push_back({b->monomial * m, F.mul(b->coeff, c)});
    p.swap(scratch);
    head = 0;
}

struct Divisors {
    std::vector<const Polynomial*> polys;

    const Polynomial* find(const Monomial& m) const
    {
        for (const auto* g : polys)
            if (g->leading_monomial().divides(m)) return g;
        return nullptr;
    }
};

/// Reduces p; when `full` is false only the leading term is reduced until irreducible.
TermVec reduce(TermVec p, const Divisors& divs, bool full, const PrimeField& F, const MonomialOrder& order,
               std::uint64_t* steps = nullptr)
{
    TermVec rem, scratch;
    std::size_t head = 0;
    while (head < p.size()) {
        const Term lt = p[head];
        const Polynomial* g = divs.find(lt.monomial);
        if (g) {
            const Monomial q = lt.monomial / g->leading_monomial();
            const FieldElement c = F.neg(F.div(lt.coeff, g->leading_coeff()));
            // the leading terms cancel exactly; skip them
            ++head;
            axpy(p, head, g->terms(), 1, q, c, F, order, scratch);
            if (steps) ++*steps;
        } else if (full) {
            rem.push_back(lt);
            ++head;
        } else {
            return TermVec(p.begin() + static_cast<std::ptrdiff_t>(head), p.end());
        }
    }
    return rem;
}

}  // namespace

// ------------------------------------------------------------ MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators) : num_vars_(num_vars)
{
    for (const auto& g : generators)
        if (g.num_vars() != num_vars) throw RingMismatch("monomial generator from a different ring");
    std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return compare_degrevlex(a, b) > 0;
    });
    for (const auto& g : generators) {
        bool redundant = false;
        for (const auto& h : gens_)
            if (h.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) gens_.push_back(g);
    }
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::uint64_t MonomialIdeal::standard_monomial_count(int d) const
{
    std::uint64_t count = 0;
    for (const auto& m : monomials_of_degree(num_vars_, d))
        if (!contains(m)) ++count;
    return count;
}

int MonomialIdeal::max_generator_degree() const
{
    int d = -1;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& rhs) const
{
    auto gens = gens_;
    gens.insert(gens.end(), rhs.gens_.begin(), rhs.gens_.end());
    return MonomialIdeal(num_vars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& rhs) const
{
    std::vector<Monomial> gens;
    for (const auto& a : gens_)
        for (const auto& b : rhs.gens_) gens.push_back(a * b);
    return MonomialIdeal(num_vars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const
{
    std::vector<Monomial> gens;
    for (const auto& g : gens_) gens.push_back(Monomial::lcm(g, m) / m);
    return MonomialIdeal(num_vars_, std::move(gens));
}

std::string MonomialIdeal::to_string(const Ring& ring) const
{
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += monomial_to_string(gens_[i], ring);
    }
    return s + ")";
}

MonomialIdeal power_of_variables(std::size_t num_vars, std::size_t begin, std::size_t end, int d)
{
    return MonomialIdeal(num_vars, monomials_of_degree(num_vars, d, begin, end));
}

// ------------------------------------------------------------ GroebnerBasis

GroebnerBasis::GroebnerBasis(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements, bool reduced,
                             bool verified)
    : ring_(std::move(ring)), order_(order), reduced_(reduced), verified_(verified)
{
    for (auto& e : elements) {
        if (!same_ring(e.ring(), ring_)) throw RingMismatch("basis element from a different ring");
        if (!e.is_zero()) elements_.push_back(e.with_order(order_));
    }
}

GroebnerBasis GroebnerBasis::checked(RingPtr ring, MonomialOrder order, std::vector<Polynomial> elements)
{
    GroebnerBasis gb(ring, order, std::move(elements), false, false);
    const auto& F = ring->field();
    Divisors divs;
    for (const auto& e : gb.elements_) divs.polys.push_back(&e);
    bool ok = true;
    for (std::size_t i = 0; i < gb.elements_.size() && ok; ++i)
        for (std::size_t j = i + 1; j < gb.elements_.size() && ok; ++j) {
            const auto& a = gb.elements_[i];
            const auto& b = gb.elements_[j];
            auto l = Monomial::lcm(a.leading_monomial(), b.leading_monomial());
            Polynomial s = a.mul_term(l / a.leading_monomial(), F.inv(a.leading_coeff()));
            s.add_scaled(b, l / b.leading_monomial(), F.neg(F.inv(b.leading_coeff())));
            if (!reduce(s.terms(), divs, true, F, order).empty()) ok = false;
        }
    gb.verified_ = ok;
    if (ok) {
        // reducedness
        bool red = true;
        for (std::size_t i = 0; i < gb.elements_.size() && red; ++i) {
            const auto& e = gb.elements_[i];
            if (!(e.leading_coeff() == F.one())) red = false;
            for (std::size_t j = 0; j < gb.elements_.size() && red; ++j) {
                if (i == j) continue;
                for (const auto& t : e.terms())
                    if (gb.elements_[j].leading_monomial().divides(t.monomial)) {
                        red = false;
                        break;
                    }
            }
        }
        gb.reduced_ = red;
    }
    return gb;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const
{
    return almax::normal_form(f, elements_, order_);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order)
{
    Divisors divs;
    std::vector<Polynomial> converted;
    converted.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (!same_ring(g.ring(), f.ring())) throw RingMismatch("divisor from a different ring");
        if (!g.is_zero()) converted.push_back(g.with_order(order));
    }
    for (const auto& g : converted) divs.polys.push_back(&g);
    auto rem = reduce(f.with_order(order).terms(), divs, true, f.field(), order);
    return Polynomial::from_sorted_terms(f.ring(), std::move(rem), order);
}

// -------------------------------------------------------------- Buchberger

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, bool reduce_result, BuchbergerStats* stats)
{
    const auto& ring = ideal.ring();
    const auto& F = ring->field();
    BuchbergerStats local;
    BuchbergerStats& st = stats ? *stats : local;

    struct Elem {
        Polynomial poly;
        int sugar;
        bool active;
    };
    struct Pair {
        std::size_t i, j;  // j == npos: input polynomial i
        Monomial lcm;
        int sugar;
    };
    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<Elem> basis;
    std::vector<Pair> queue;
    std::vector<Polynomial> inputs;
    for (const auto& g : ideal.generators()) {
        inputs.push_back(g.with_order(order));
        queue.push_back({inputs.size() - 1, npos, inputs.back().leading_monomial(), g.total_degree()});
    }

    auto lm = [&](std::size_t k) -> const Monomial& { return basis[k].poly.leading_monomial(); };

    auto insert = [&](Polynomial h, int sugar) {
        const std::size_t t = basis.size();
        basis.push_back({std::move(h), sugar, true});
        const Monomial& lh = lm(t);
        // Gebauer-Moeller update
        struct Cand {
            std::size_t g;
            Monomial lcm;
            bool keep;
        };
        std::vector<Cand> cands;
        for (std::size_t g = 0; g < t; ++g)
            if (basis[g].active) cands.push_back({g, Monomial::lcm(lh, lm(g)), true});
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (lh.coprime(lm(cands[a].g))) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || !cands[b].keep) continue;
                if (cands[b].lcm.divides(cands[a].lcm)) {
                    // equal lcms: keep the first only
                    if (cands[b].lcm == cands[a].lcm && b > a) continue;
                    cands[a].keep = false;
                    break;
                }
            }
        }
        std::vector<Pair> kept;
        for (auto& p : queue) {
            if (p.j == npos) {
                kept.push_back(p);
                continue;
            }
            if (lh.divides(p.lcm) && !(Monomial::lcm(lm(p.i), lh) == p.lcm) && !(Monomial::lcm(lm(p.j), lh) == p.lcm))
                continue;
            kept.push_back(p);
        }
        queue.swap(kept);
        for (auto& c : cands) {
            if (!c.keep || lh.coprime(lm(c.g))) continue;
            const int s = std::max(basis[c.g].sugar + c.lcm.degree() - lm(c.g).degree(),
                                   sugar + c.lcm.degree() - lh.degree());
            queue.push_back({c.g, t, c.lcm, s});
            ++st.pairs_created;
        }
        for (std::size_t g = 0; g < t; ++g)
            if (basis[g].active && lh.divides(lm(g))) basis[g].active = false;
    };

    TermVec scratch;
    while (!queue.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < queue.size(); ++k) {
            const auto& a = queue[k];
            const auto& b = queue[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
                continue;
            }
            auto c = order.compare(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
        }
        Pair pr = queue[best];
        queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(best));

        TermVec s;
        if (pr.j == npos) {
            s = inputs[pr.i].terms();
        } else {
            // basis elements are monic
            const auto& a = basis[pr.i].poly;
            const auto& b = basis[pr.j].poly;
            const Monomial ma = pr.lcm / a.leading_monomial();
            s.reserve(a.size());
            for (const auto& t : a.terms()) s.push_back({t.monomial * ma, t.coeff});
            std::size_t head = 1;
            axpy(s, head, b.terms(), 1, pr.lcm / b.leading_monomial(), F.neg(F.one()), F, order, scratch);
            ++st.pairs_reduced;
        }
        Divisors divs;
        for (const auto& e : basis)
            if (e.active) divs.polys.push_back(&e.poly);
        TermVec r = reduce(std::move(s), divs, false, F, order, &st.reduction_steps);
        if (r.empty()) {
            ++st.zero_reductions;
            continue;
        }
        Polynomial h = Polynomial::from_sorted_terms(ring, std::move(r), order).monic();
        insert(std::move(h), pr.sugar);
    }

    std::vector<Polynomial> out;
    for (const auto& e : basis)
        if (e.active) out.push_back(e.poly);
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    if (reduce_result) {
        std::vector<Polynomial> reduced;
        for (std::size_t k = 0; k < out.size(); ++k) {
            Divisors divs;
            for (std::size_t m = 0; m < out.size(); ++m)
                if (m != k) divs.polys.push_back(&out[m]);
            TermVec tail(out[k].terms().begin() + 1, out[k].terms().end());
            TermVec r = reduce(std::move(tail), divs, true, F, order);
            r.insert(r.begin(), out[k].leading_term());
            reduced.push_back(Polynomial::from_sorted_terms(ring, std::move(r), order).monic());
        }
        out = std::move(reduced);
    }
    return GroebnerBasis(ring, order, std::move(out), reduce_result, true);
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb)
{
    if (!gb.verified()) throw NotAGroebnerBasis("initial_ideal needs a verified Groebner basis");
    std::vector<Monomial> lms;
    for (const auto& e : gb.elements()) lms.push_back(e.leading_monomial());
    return MonomialIdeal(gb.ring()->num_vars(), std::move(lms));
}

std::uint64_t graded_piece_dim(const GroebnerBasis& gb, int d)
{
    return initial_ideal(gb).standard_monomial_count(d);
}

// ------------------------------------------------------------- elimination

namespace {

std::string fresh_name(const Ring& ring, const std::string& base)
{
    std::string name = base;
    for (int k = 0; ring.index_of(name); ++k) name = base + std::to_string(k);
    return name;
}

/// Embeds f into a ring with `extra` new variables prepended.
Polynomial lift(const Polynomial& f, const RingPtr& big, std::size_t extra)
{
    std::vector<Term> terms;
    const std::size_t n = big->num_vars();
    for (const auto& t : f.terms()) {
        Monomial m(n);
        for (std::size_t i = 0; i < t.monomial.num_vars(); ++i) m.set(i + extra, t.monomial[i]);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(big, std::move(terms));
}

/// Drops the first `block` variables (which must not occur).
Polynomial project(const Polynomial& f, const RingPtr& small, std::size_t block)
{
    std::vector<Term> terms;
    const std::size_t n = small->num_vars();
    for (const auto& t : f.terms()) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, t.monomial[i + block]);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(small, std::move(terms));
}

Ideal make_ideal(const RingPtr& ring, std::vector<Polynomial> gens)
{
    bool homogeneous = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
    return homogeneous ? Ideal(ring, std::move(gens)) : Ideal::inhomogeneous(ring, std::move(gens));
}

}  // namespace

Ideal elimination_ideal(const Ideal& ideal, std::size_t first_block)
{
    const auto& ring = ideal.ring();
    if (first_block == 0 || first_block >= ring->num_vars())
        throw std::invalid_argument("elimination block must leave at least one variable");
    auto order = MonomialOrder::elimination(first_block);
    auto gb = buchberger(ideal, order);
    std::vector<std::string> names(ring->names().begin() + static_cast<std::ptrdiff_t>(first_block),
                                   ring->names().end());
    auto small = make_ring(std::move(names), ring->field().characteristic());
    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements())
        if (g.leading_monomial().degree_in(0, first_block) == 0) gens.push_back(project(g, small, first_block));
    return make_ideal(small, std::move(gens));
}

Ideal implicitize_curve(std::span<const Polynomial> forms, std::vector<std::string> target_names)
{
    if (forms.size() < 2) throw std::invalid_argument("need at least two forms");
    const auto& src = forms.front().ring();
    if (src->num_vars() != 2) throw std::invalid_argument("parametrising forms must live in a two-variable ring");
    std::optional<int> degree;
    for (const auto& f : forms) {
        if (!same_ring(f.ring(), src)) throw RingMismatch("forms from different rings");
        auto d = f.homogeneous_degree();
        if (!d || *d < 1) throw std::invalid_argument("forms must be nonzero homogeneous of positive degree");
        if (degree && *degree != *d) throw std::invalid_argument("forms must share one degree");
        degree = d;
    }
    {
        // the image is a point when all forms are proportional
        const auto& F = src->field();
        FpMatrix coeffs(F, forms.size(), static_cast<std::size_t>(*degree) + 1);
        for (std::size_t i = 0; i < forms.size(); ++i)
            for (const auto& t : forms[i].terms()) coeffs(i, static_cast<std::size_t>(t.monomial[1])) = t.coeff;
        if (coeffs.rank() < 2) throw DegenerateImage("all parametrising forms are proportional");
    }
    if (target_names.empty())
        for (std::size_t i = 0; i < forms.size(); ++i) target_names.push_back("x" + std::to_string(i));
    if (target_names.size() != forms.size()) throw std::invalid_argument("one target variable per form is required");
    std::vector<std::string> names = src->names();
    for (auto& n : names)
        for (const auto& t : target_names)
            if (n == t) n = "_" + n;
    names.insert(names.end(), target_names.begin(), target_names.end());
    auto graph_ring = make_ring(names, src->field().characteristic());
    const std::size_t k = forms.size();
    std::vector<Polynomial> graph;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Term> terms;
        for (const auto& t : forms[i].terms()) {
            Monomial m(graph_ring->num_vars());
            m.set(0, t.monomial[0]);
            m.set(1, t.monomial[1]);
            terms.push_back({m, t.coeff});
        }
        Polynomial f = Polynomial::from_terms(graph_ring, std::move(terms));
        graph.push_back(Polynomial::variable(graph_ring, 2 + i) - f);
    }
    Ideal kernel = elimination_ideal(Ideal::inhomogeneous(graph_ring, std::move(graph)), 2);
    auto target = make_ring(target_names, src->field().characteristic());
    std::vector<Polynomial> gens;
    for (const auto& g : kernel.generators())
        gens.push_back(Polynomial::from_terms(target, g.terms()));
    // a kernel of a graded map is homogeneous; the constructor checks it
    return Ideal(target, std::move(gens));
}

// ------------------------------------------------------- ideal operations

bool ideal_contains(const Ideal& big, const Ideal& small)
{
    if (!same_ring(big.ring(), small.ring())) throw RingMismatch("ideals from different rings");
    auto gb = buchberger(big, MonomialOrder::degrevlex());
    for (const auto& g : small.generators())
        if (!gb.contains(g)) return false;
    return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b)
{
    return ideal_contains(a, b) && ideal_contains(b, a);
}

Ideal intersect(const Ideal& a, const Ideal& b)
{
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideals from different rings");
    const auto& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
    std::vector<std::string> names{fresh_name(*ring, "_y")};
    names.insert(names.end(), ring->names().begin(), ring->names().end());
    auto big = make_ring(names, ring->field().characteristic());
    const auto& F = ring->field();
    Polynomial y = Polynomial::variable(big, 0);
    Polynomial one_minus_y = Polynomial::constant(big, F.one()) - y;
    std::vector<Polynomial> gens;
    for (const auto& g : a.generators()) gens.push_back(y * lift(g, big, 1));
    for (const auto& g : b.generators()) gens.push_back(one_minus_y * lift(g, big, 1));
    Ideal elim = elimination_ideal(Ideal::inhomogeneous(big, std::move(gens)), 1);
    std::vector<Polynomial> out;
    for (const auto& g : elim.generators()) out.push_back(Polynomial::from_terms(ring, g.terms()));
    return make_ideal(ring, std::move(out));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw DivisionByZero();
    const auto& F = a.field();
    const auto order = MonomialOrder::degrevlex();
    Polynomial rem = a.with_order(order);
    Polynomial bb = b.with_order(order);
    std::vector<Term> quotient;
    while (!rem.is_zero()) {
        const auto& lt = rem.leading_term();
        if (!bb.leading_monomial().divides(lt.monomial))
            throw std::domain_error("polynomial division is not exact");
        Monomial q = lt.monomial / bb.leading_monomial();
        FieldElement c = F.div(lt.coeff, bb.leading_coeff());
        quotient.push_back({q, c});
        rem.add_scaled(bb, q, F.neg(c));
    }
    return Polynomial::from_terms(a.ring(), std::move(quotient), order);
}

Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f)
{
    if (f.is_zero()) throw std::invalid_argument("ideal quotient by the zero polynomial");
    const auto& ring = ideal.ring();
    Ideal cap = intersect(ideal, make_ideal(ring, {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : cap.generators()) gens.push_back(divide_exact(g, f));
    auto out = make_ideal(ring, std::move(gens));
    // reduced generators keep outputs canonical
    auto gb = buchberger(out, MonomialOrder::degrevlex());
    return make_ideal(ring, gb.elements());
}

Ideal ideal_quotient(const Ideal& ideal, const Ideal& by)
{
    if (by.is_zero()) throw std::invalid_argument("ideal quotient by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& g : by.generators()) {
        Ideal q = ideal_quotient(ideal, g);
        acc = acc ? intersect(*acc, q) : q;
    }
    auto gb = buchberger(*acc, MonomialOrder::degrevlex());
    return make_ideal(ideal.ring(), gb.elements());
}

Ideal saturation(const Ideal& ideal, const Ideal& by)
{
    constexpr int kMaxRounds = 50;
    Ideal current = ideal;
    for (int round = 0; round < kMaxRounds; ++round) {
        Ideal next = ideal_quotient(current, by);
        if (ideal_contains(current, next)) return current;
        current = std::move(next);
    }
    throw std::runtime_error("saturation did not stabilise within 50 quotient rounds");
}

Ideal apply_linear_change(const Ideal& ideal, const FpMatrix& m)
{
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(apply_linear_change(g, m));
    return make_ideal(ideal.ring(), std::move(gens));
}

GenericCoordinates generic_coordinates(const Ideal& ideal, Rng& rng)
{
    auto m = random_invertible_matrix(ideal.ring()->field(), ideal.ring()->num_vars(), rng);
    return {apply_linear_change(ideal, m), m};
}

GinResult generic_initial_ideal(const Ideal& ideal, std::size_t trials, Rng& rng)
{
    if (trials < 2) throw std::invalid_argument("generic initial ideal needs at least two trials");
    const std::size_t budget = 2 * trials;
    GinResult result{MonomialIdeal(ideal.ring()->num_vars()), {}, 0};
    std::vector<std::size_t> votes;
    for (std::size_t k = 0; k < budget; ++k) {
        auto gc = generic_coordinates(ideal, rng);
        auto in = initial_ideal(buchberger(gc.ideal, MonomialOrder::degrevlex()));
        result.candidates.push_back(in);
        std::size_t count = 0;
        for (const auto& c : result.candidates)
            if (c == in) ++count;
        if (k + 1 >= trials) {
            // most voted candidate, earliest on ties
            std::size_t best = 0, best_votes = 0;
            for (std::size_t a = 0; a < result.candidates.size(); ++a) {
                std::size_t v = 0;
                for (const auto& c : result.candidates)
                    if (c == result.candidates[a]) ++v;
                if (v > best_votes) {
                    best = a;
                    best_votes = v;
                }
            }
            if (best_votes >= 2) {
                result.gin = result.candidates[best];
                result.agreeing = best_votes;
                return result;
            }
        }
        (void)count;
    }
    std::string msg = "generic initial ideal unstable across " + std::to_string(budget) + " trials:";
    for (const auto& c : result.candidates) msg += " " + c.to_string(*ideal.ring());
    throw GenericityError(msg);
}

bool is_stable_monomial_ideal(const MonomialIdeal& m)
{
    for (const auto& g : m.generators()) {
        const int j = g.max_index();
        if (j <= 0) continue;
        Monomial base = g / Monomial::variable(g.num_vars(), static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i)
            if (!m.contains(base * Monomial::variable(g.num_vars(), static_cast<std::size_t>(i)))) return false;
    }
    return true;
}

bool is_strongly_stable_monomial_ideal(const MonomialIdeal& m)
{
    for (const auto& g : m.generators())
        for (std::size_t j = 1; j < g.num_vars(); ++j) {
            if (g[j] == 0) continue;
            Monomial base = g / Monomial::variable(g.num_vars(), j);
            for (std::size_t i = 0; i < j; ++i)
                if (!m.contains(base * Monomial::variable(g.num_vars(), i))) return false;
        }
    return true;
}

Ideal to_ideal(const MonomialIdeal& m, const RingPtr& ring)
{
    if (ring->num_vars() != m.num_vars()) throw RingMismatch("monomial ideal from a different ring");
    std::vector<Polynomial> gens;
    for (const auto& g : m.generators()) gens.push_back(Polynomial::monomial(ring, g, ring->field().one()));
    return Ideal(ring, std::move(gens));
}

}  // namespace almax
