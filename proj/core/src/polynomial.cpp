#include "jmult/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jmult {

PolyRing::PolyRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
    if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
        throw std::invalid_argument("variable count must be in [1, 16]");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
        if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0]))))
            throw std::invalid_argument("bad variable name: " + v);
        for (char c : v)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw std::invalid_argument("bad variable name: " + v);
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable name: " + v);
    }
    if (order_.kind == OrderKind::elim_block &&
        (order_.block < 0 || order_.block > static_cast<int>(vars_.size())))
        throw std::invalid_argument("elimination block out of range");
}

int PolyRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

bool PolyRing::compatible(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
}

bool PolyRing::operator==(const PolyRing& o) const {
    return compatible(o) && order_ == o.order_;
}

RingPtr PolyRing::make(std::uint32_t characteristic, std::vector<std::string> variables,
                       MonomialOrder order) {
    return std::make_shared<const PolyRing>(PrimeField(characteristic), std::move(variables),
                                            order);
}

RingPtr PolyRing::with_order(const RingPtr& ring, MonomialOrder order) {
    if (ring->order() == order) return ring;
    return std::make_shared<const PolyRing>(ring->field(), ring->variables(), order);
}

void require_same_ring(const Polynomial& a, const Polynomial& b) {
    if (a.ring() != b.ring() && !(*a.ring() == *b.ring()))
        throw std::invalid_argument("ring mismatch");
}

Polynomial Polynomial::constant(RingPtr ring, long long value) {
    Polynomial p(ring);
    std::uint32_t c = ring->field().from_int(value);
    if (c != 0) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
    if (index < 0 || index >= ring->nvars())
        throw std::invalid_argument("unknown variable index");
    Polynomial p(ring);
    Monomial m(ring->nvars());
    m.set_exponent(index, 1);
    p.terms_.push_back({m, 1});
    return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&ord](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    const auto& F = ring_->field();
    for (const Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = F.add(out.back().coeff, t.coeff);
        else
            out.push_back(t);
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_[0];
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const Term& t : terms_)
        if (t.mono.degree() != terms_[0].mono.degree()) return false;
    return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_ring(*this, o);
    const auto& ord = ring_->order();
    const auto& F = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    const auto& F = ring_->field();
    for (const Term& t : terms_) r.terms_.push_back({t.mono, F.neg(t.coeff)});
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    const auto& F = ring_->field();
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono, F.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::times_term(std::uint32_t c, const Monomial& m) const {
    Polynomial r(ring_);
    if (c == 0) return r;
    const auto& F = ring_->field();
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mono.times(m), F.mul(t.coeff, c)});
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(*this, o);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    const auto& F = ring_->field();
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            acc.push_back({a.mono.times(b.mono), F.mul(a.coeff, b.coeff)});
    return from_terms(ring_, std::move(acc));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial base = *this;
    Polynomial r = Polynomial::constant(ring_, 1);
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::submul(std::uint32_t c, const Monomial& m, const Polynomial& g) const {
    // Merging works because m*(sorted g) stays sorted: orders are multiplicative.
    const auto& ord = ring_->order();
    const auto& F = ring_->field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        Monomial gm = g.terms_[j].mono.times(m);
        int cmp = ord.compare(terms_[i].mono, gm);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back({gm, F.neg(F.mul(c, g.terms_[j].coeff))});
            ++j;
        } else {
            std::uint32_t s = F.sub(terms_[i].coeff, F.mul(c, g.terms_[j].coeff));
            if (s != 0) r.terms_.push_back({terms_[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j)
        r.terms_.push_back({g.terms_[j].mono.times(m), F.neg(F.mul(c, g.terms_[j].coeff))});
    return r;
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
    if (!ring_->compatible(*other))
        throw std::invalid_argument("incompatible rings");
    return from_terms(other, terms_);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const std::uint32_t p = ring_->field().characteristic();
    bool first = true;
    for (const Term& t : terms_) {
        // Balanced representative for readability; reparsing is exact.
        bool negative = t.coeff > p / 2;
        std::uint32_t mag = negative ? p - t.coeff : t.coeff;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool wrote_coeff = false;
        if (mag != 1 || t.mono.is_one()) {
            os << mag;
            wrote_coeff = true;
        }
        bool wrote_var = false;
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (wrote_coeff || wrote_var) os << "*";
            os << ring_->variables()[static_cast<std::size_t>(i)];
            if (t.mono[i] > 1) os << "^" << t.mono[i];
            wrote_var = true;
        }
    }
    return os.str();
}

Polynomial partial_derivative(const Polynomial& f, int var) {
    if (var < 0 || var >= f.ring()->nvars())
        throw std::invalid_argument("unknown variable");
    const auto& F = f.ring()->field();
    std::vector<Term> acc;
    for (const Term& t : f.terms()) {
        std::uint32_t e = t.mono[var];
        if (e == 0) continue;
        std::uint32_t c = F.mul(t.coeff, F.from_int(static_cast<long long>(e)));
        if (c == 0) continue;
        Monomial m = t.mono;
        m.set_exponent(var, e - 1);
        acc.push_back({m, c});
    }
    return Polynomial::from_terms(f.ring(), std::move(acc));
}

Polynomial partial_derivative(const Polynomial& f, const std::string& var) {
    int i = f.ring()->var_index(var);
    if (i < 0) throw std::invalid_argument("unknown variable: " + var);
    return partial_derivative(f, i);
}

std::vector<Polynomial> gradient(const Polynomial& f) {
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(f.ring()->nvars()));
    for (int i = 0; i < f.ring()->nvars(); ++i) out.push_back(partial_derivative(f, i));
    return out;
}

} // namespace jmult
