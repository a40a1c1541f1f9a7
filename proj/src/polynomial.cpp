#include "almax/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace almax {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t num_vars) : n_(static_cast<std::uint16_t>(num_vars))
{
    if (num_vars > kMaxVars) throw std::invalid_argument("too many variables");
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size()))
{
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size())
{
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, int power)
{
    Monomial m(num_vars);
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, int exponent)
{
    if (i >= n_) throw std::out_of_range("variable index out of range");
    if (exponent < 0 || exponent > 0xffff) throw std::invalid_argument("exponent out of range");
    deg_ = deg_ - e_[i] + static_cast<std::uint32_t>(exponent);
    e_[i] = static_cast<std::uint16_t>(exponent);
}

bool Monomial::divides(const Monomial& other) const
{
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
}

int Monomial::max_index() const
{
    for (int i = static_cast<int>(n_) - 1; i >= 0; --i)
        if (e_[i] != 0) return i;
    return -1;
}

int Monomial::min_index() const
{
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] != 0) return static_cast<int>(i);
    return -1;
}

int Monomial::degree_in(std::size_t begin, std::size_t end) const
{
    int d = 0;
    for (std::size_t i = begin; i < std::min<std::size_t>(end, n_); ++i) d += e_[i];
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const
{
    if (n_ != rhs.n_) throw RingMismatch("monomials from different rings");
    Monomial m(*this);
    for (std::size_t i = 0; i < n_; ++i) {
        unsigned s = unsigned(e_[i]) + rhs.e_[i];
        if (s > 0xffff) throw std::overflow_error("exponent overflow");
        m.e_[i] = static_cast<std::uint16_t>(s);
    }
    m.deg_ = deg_ + rhs.deg_;
    return m;
}

Monomial Monomial::operator/(const Monomial& rhs) const
{
    if (n_ != rhs.n_) throw RingMismatch("monomials from different rings");
    Monomial m(*this);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rhs.e_[i] > e_[i]) throw std::domain_error("monomial quotient is not exact");
        m.e_[i] = static_cast<std::uint16_t>(e_[i] - rhs.e_[i]);
    }
    m.deg_ = deg_ - rhs.deg_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b)
{
    if (a.n_ != b.n_) throw RingMismatch("monomials from different rings");
    Monomial m(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        m.e_[i] = std::max(a.e_[i], b.e_[i]);
        m.deg_ += m.e_[i];
    }
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
    if (a.n_ != b.n_) throw RingMismatch("monomials from different rings");
    Monomial m(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        m.e_[i] = std::min(a.e_[i], b.e_[i]);
        m.deg_ += m.e_[i];
    }
    return m;
}

std::size_t Monomial::hash() const
{
    std::size_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ULL;
    return h;
}

// ------------------------------------------------------------------ orders

std::strong_ordering compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t begin)
{
    const int da = a.degree_in(begin, kMaxVars), db = b.degree_in(begin, kMaxVars);
    if (da != db) return da <=> db;
    for (std::size_t i = a.num_vars(); i-- > begin;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_lex(const Monomial& a, const Monomial& b, std::size_t end)
{
    const std::size_t n = std::min(a.num_vars(), end);
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const
{
    switch (kind_) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elimination(" + std::to_string(block_) + ")";
    }
    return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    if (a.num_vars() != b.num_vars()) throw RingMismatch("comparing monomials from different rings");
    switch (kind_) {
    case Kind::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = a.num_vars(); i-- > 0;)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    case Kind::Lex:
        return compare_lex(a, b);
    case Kind::Elimination: {
        auto c = compare_lex(a, b, block_);
        if (c != 0) return c;
        return compare_degrevlex(a, b, block_);
    }
    }
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, PrimeField field) : names_(std::move(names)), field_(field)
{
    if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
    if (names_.size() > kMaxVars) throw std::invalid_argument("at most 16 variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const auto& n = names_[i];
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw std::invalid_argument("invalid variable name '" + n + "'");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("invalid variable name '" + n + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == n) throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
    if (field_.characteristic() <= names_.size() + 2)
        throw std::invalid_argument("characteristic must exceed the number of variables plus two");
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names, std::uint32_t characteristic)
{
    return std::make_shared<const Ring>(std::move(names), PrimeField(characteristic));
}

RingPtr make_standard_ring(std::size_t num_vars, std::uint32_t characteristic)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < num_vars; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(std::move(names), characteristic);
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// -------------------------------------------------------------- Polynomial

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b)
{
    if (!same_ring(a.ring(), b.ring())) throw RingMismatch("polynomials from different rings");
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order)
{
    if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order)
{
    Polynomial p(std::move(ring), order);
    const auto& field = p.field();
    for (const auto& t : terms)
        if (t.monomial.num_vars() != p.ring_->num_vars())
            throw RingMismatch("term has the wrong number of variables");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(t);
        }
    }
    return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms, MonomialOrder order)
{
    Polynomial p(std::move(ring), order);
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, FieldElement c, MonomialOrder order)
{
    Monomial one(ring->num_vars());
    return monomial(std::move(ring), one, c, order);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, MonomialOrder order)
{
    auto m = Monomial::variable(ring->num_vars(), index);
    auto one = ring->field().one();
    return monomial(std::move(ring), m, one, order);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, FieldElement c, MonomialOrder order)
{
    Polynomial p(std::move(ring), order);
    if (m.num_vars() != p.ring_->num_vars()) throw RingMismatch("monomial has the wrong number of variables");
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

const Term& Polynomial::leading_term() const
{
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

std::optional<int> Polynomial::homogeneous_degree() const
{
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.front().monomial.degree();
    for (const auto& t : terms_)
        if (t.monomial.degree() != d) return std::nullopt;
    return d;
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

FieldElement Polynomial::coeff(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term& t, const Monomial& x) {
        return order_.compare(t.monomial, x) > 0;
    });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return {};
}

Polynomial Polynomial::with_order(const MonomialOrder& order) const
{
    if (order == order_) return *this;
    Polynomial p(ring_, order);
    p.terms_ = terms_;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
    return p;
}

Polynomial Polynomial::scaled(FieldElement c) const
{
    Polynomial p(ring_, order_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, field().mul(t.coeff, c)});
    return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, FieldElement c) const
{
    Polynomial p(ring_, order_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
    return p;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
}

Polynomial Polynomial::operator-() const
{
    return scaled(field().neg(field().one()));
}

void Polynomial::add_scaled(const Polynomial& g, const Monomial& m, FieldElement c)
{
    require_same_ring(*this, g);
    if (!(g.order_ == order_)) throw std::invalid_argument("add_scaled: mismatched monomial orders");
    if (c.is_zero() || g.is_zero()) return;
    const auto& F = field();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    const bool unit = m.is_one();
    while (a != terms_.end() && b != g.terms_.end()) {
        Monomial bm = unit ? b->monomial : b->monomial * m;
        auto cmp = order_.compare(a->monomial, bm);
        if (cmp > 0) {
            out.push_back(*a++);
        } else if (cmp < 0) {
            out.push_back({bm, F.mul(b->coeff, c)});
            ++b;
        } else {
            auto s = F.add(a->coeff, F.mul(b->coeff, c));
            if (!s.is_zero()) out.push_back({a->monomial, s});
            ++a;
            ++b;
        }
    }
    for (; a != terms_.end(); ++a) out.push_back(*a);
    for (; b != g.terms_.end(); ++b) out.push_back({unit ? b->monomial : b->monomial * m, F.mul(b->coeff, c)});
    terms_ = std::move(out);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    Polynomial r = a;
    r.add_scaled(b.with_order(a.order_), Monomial(a.ring_->num_vars()), a.field().one());
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    Polynomial r = a;
    r.add_scaled(b.with_order(a.order_), Monomial(a.ring_->num_vars()), a.field().neg(a.field().one()));
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_ring(a, b);
    std::vector<Term> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    const auto& F = a.field();
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) terms.push_back({s.monomial * t.monomial, F.mul(s.coeff, t.coeff)});
    return Polynomial::from_terms(a.ring_, std::move(terms), a.order_);
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial result = constant(ring_, field().one(), order_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (!same_ring(a.ring_, b.ring_)) return false;
    const auto& bt = a.order_ == b.order_ ? b.terms_ : b.with_order(a.order_).terms_;
    if (a.terms_.size() != bt.size()) return false;
    for (std::size_t i = 0; i < bt.size(); ++i)
        if (!(a.terms_[i].monomial == bt[i].monomial) || !(a.terms_[i].coeff == bt[i].coeff)) return false;
    return true;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring)
{
    std::string s;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.name(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        std::int64_t c = field().signed_value(t.coeff);
        if (k == 0) {
            if (c < 0) s += '-';
        } else {
            s += c < 0 ? " - " : " + ";
        }
        std::int64_t mag = c < 0 ? -c : c;
        if (t.monomial.is_one()) {
            s += std::to_string(mag);
        } else {
            if (mag != 1) s += std::to_string(mag) + '*';
            s += monomial_to_string(t.monomial, *ring_);
        }
    }
    return s;
}

// ------------------------------------------------------------ linear change

Polynomial apply_linear_change(const Polynomial& f, const FpMatrix& m)
{
    const auto& ring = f.ring();
    const std::size_t n = ring->num_vars();
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("coordinate change has the wrong size");
    if (!m.is_invertible()) throw std::invalid_argument("coordinate change matrix is singular");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < n; ++j) terms.push_back({Monomial::variable(n, j), m(i, j)});
        images.push_back(Polynomial::from_terms(ring, std::move(terms), f.order()));
    }
    // powers[i][k] = images[i]^k, filled lazily
    std::vector<std::vector<Polynomial>> powers(n);
    auto power = [&](std::size_t i, int k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(ring, ring->field().one(), f.order()));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };
    std::vector<Term> acc;
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(ring, t.coeff, f.order());
        for (std::size_t i = 0; i < n; ++i)
            if (t.monomial[i] > 0) prod = prod * power(i, t.monomial[i]);
        acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    return Polynomial::from_terms(ring, std::move(acc), f.order());
}

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : Ideal(std::move(ring), std::move(generators), true) {}

Ideal Ideal::inhomogeneous(RingPtr ring, std::vector<Polynomial> generators)
{
    return Ideal(std::move(ring), std::move(generators), false);
}

Ideal Ideal::maximal(RingPtr ring)
{
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->num_vars(); ++i) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(std::move(ring), std::move(gens));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, bool require_homogeneous) : ring_(std::move(ring))
{
    for (auto& g : generators) {
        if (!same_ring(g.ring(), ring_)) throw RingMismatch("generator from a different ring");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) {
            if (require_homogeneous)
                throw std::invalid_argument("generator is not homogeneous: " + g.to_string());
            homogeneous_ = false;
        }
        gens_.push_back(g.with_order(MonomialOrder::degrevlex()));
    }
}

// ----------------------------------------------------------------- parsing

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column), message_(message)
{
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring, std::size_t line) : s_(text), ring_(ring), line_(line) {}

    Polynomial parse()
    {
        skip_ws();
        if (pos_ == s_.size()) fail(pos_, "empty polynomial");
        Polynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(pos_, std::string("unexpected character '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string& msg) const { throw ParseError(line_, at + 1, msg); }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Polynomial expr()
    {
        const auto& F = ring_->field();
        Polynomial acc(ring_);
        bool negate = false;
        skip_ws();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        for (;;) {
            Polynomial t = term();
            acc.add_scaled(t, Monomial(ring_->num_vars()), negate ? F.neg(F.one()) : F.one());
            skip_ws();
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                negate = s_[pos_] == '-';
                ++pos_;
            } else {
                return acc;
            }
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial base = primary();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            const std::size_t caret = pos_++;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail(caret, "expected an exponent after '^'");
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned>(s_[pos_++] - '0');
                if (e > 10000) fail(caret, "exponent too large");
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary()
    {
        skip_ws();
        if (pos_ >= s_.size()) fail(pos_, "unexpected end of input");
        const char c = s_[pos_];
        const auto& F = ring_->field();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = 0;
            const std::uint64_t p = F.characteristic();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = (v * 10 + static_cast<unsigned>(s_[pos_++] - '0')) % p;
            return Polynomial::constant(ring_, {static_cast<std::uint32_t>(v)});
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) fail(start, "unknown variable '" + std::string(name) + "'");
            return Polynomial::variable(ring_, *idx);
        }
        if (c == '(') {
            const std::size_t open = pos_++;
            Polynomial inner = expr();
            skip_ws();
            if (pos_ >= s_.size() || s_[pos_] != ')') fail(open, "unbalanced '('");
            ++pos_;
            return inner;
        }
        fail(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    const RingPtr& ring_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line)
{
    return PolyParser(text, ring, line).parse();
}

// --------------------------------------------------------- monomial bases

std::uint64_t monomial_count(std::size_t n, int d)
{
    if (d < 0) return 0;
    if (n == 0) return d == 0 ? 1 : 0;
    // C(d + n - 1, n - 1)
    std::uint64_t r = 1;
    for (std::size_t i = 1; i < n; ++i) r = r * (static_cast<std::uint64_t>(d) + i) / i;
    return r;
}

std::vector<Monomial> monomials_of_degree(std::size_t num_vars, int d, std::size_t begin, std::size_t end)
{
    end = std::min(end, num_vars);
    std::vector<Monomial> out;
    if (d < 0 || begin > end) return out;
    if (begin == end) {
        if (d == 0) out.emplace_back(num_vars);
        return out;
    }
    Monomial cur(num_vars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == end) {
            cur.set(i, left);
            out.push_back(cur);
            cur.set(i, 0);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur.set(i, k);
            rec(i + 1, left - k);
        }
        cur.set(i, 0);
    };
    rec(begin, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; });
    return out;
}

}  // namespace almax
