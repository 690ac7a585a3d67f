#include "jmult/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace jmult {

namespace {

std::vector<Polynomial> drop_zeros(std::vector<Polynomial> gens) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (auto& g : gens)
        if (!g.is_zero()) out.push_back(std::move(g));
    return out;
}

HilbertData hilbert_of(const GroebnerBasis& gb, int nvars) {
    return hilbert_from_leading_terms(gb.leading_monomials(), nvars);
}

std::pair<int, int> order_key(const MonomialOrder& o) {
    return {static_cast<int>(o.kind), o.block};
}

/// Fresh auxiliary variable name not clashing with the ring's.
std::string fresh_var_name(const PolyRing& ring) {
    std::string base = "t";
    for (int i = 0;; ++i) {
        std::string name = base + std::to_string(i) + "_";
        if (ring.var_index(name) < 0) return name;
    }
}

/// Map f into dst, sending source variable i to dst variable position[i].
Polynomial map_vars(const Polynomial& f, const RingPtr& dst, const std::vector<int>& position) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        Monomial m(dst->nvars());
        for (int i = 0; i < t.mono.nvars(); ++i)
            if (t.mono[i]) m.set_exponent(position[static_cast<std::size_t>(i)], t.mono[i]);
        terms.push_back({m, t.coeff});
    }
    return Polynomial::from_terms(dst, std::move(terms));
}

} // namespace

std::vector<Polynomial> intersect_ambient(const std::vector<Polynomial>& a,
                                          const std::vector<Polynomial>& b) {
    RingPtr ring;
    for (const auto& f : a) { ring = f.ring(); break; }
    if (!ring)
        for (const auto& f : b) { ring = f.ring(); break; }
    if (!ring) return {};
    if (a.empty() || b.empty()) return {};

    // (w*a + (1-w)*b) ∩ k[x]
    std::vector<std::string> vars;
    vars.push_back(fresh_var_name(*ring));
    for (const auto& v : ring->variables()) vars.push_back(v);
    RingPtr big = std::make_shared<const PolyRing>(ring->field(), vars, MonomialOrder::elim(1));
    std::vector<int> into_big(static_cast<std::size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i) into_big[static_cast<std::size_t>(i)] = i + 1;

    Polynomial w = Polynomial::variable(big, 0);
    Polynomial one_minus_w = Polynomial::constant(big, 1) - w;
    std::vector<Polynomial> gens;
    gens.reserve(a.size() + b.size());
    for (const auto& f : a) gens.push_back(w * map_vars(f, big, into_big));
    for (const auto& f : b) gens.push_back(one_minus_w * map_vars(f, big, into_big));

    GroebnerBasis gb = groebner_basis(gens, MonomialOrder::elim(1));
    std::vector<int> back(static_cast<std::size_t>(big->nvars()), -1);
    for (int i = 0; i < ring->nvars(); ++i) back[static_cast<std::size_t>(i + 1)] = i;

    std::vector<Polynomial> out;
    for (const auto& g : gb.elements) {
        bool has_w = false;
        for (const Term& t : g.terms())
            if (t.mono[0]) { has_w = true; break; }
        if (!has_w) out.push_back(map_vars(g, ring, back));
    }
    return out;
}

std::vector<Polynomial> eliminate_ambient(const std::vector<Polynomial>& gens,
                                          const std::vector<int>& drop) {
    if (gens.empty() || drop.empty()) {
        if (drop.empty() && !gens.empty()) {
            GroebnerBasis gb = groebner_basis(gens, gens[0].ring()->order());
            std::vector<Polynomial> out;
            for (const auto& g : gb.elements) out.push_back(g.in_ring(gens[0].ring()));
            return out;
        }
        return gens;
    }
    RingPtr ring = gens[0].ring();
    std::vector<bool> dropped(static_cast<std::size_t>(ring->nvars()), false);
    for (int i : drop) {
        if (i < 0 || i >= ring->nvars()) throw std::invalid_argument("bad variable index");
        dropped[static_cast<std::size_t>(i)] = true;
    }
    // Permute dropped variables to the front and use a block order.
    std::vector<std::string> vars;
    std::vector<int> position(static_cast<std::size_t>(ring->nvars()));
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < ring->nvars(); ++i)
            if (dropped[static_cast<std::size_t>(i)] == (pass == 0)) {
                position[static_cast<std::size_t>(i)] = static_cast<int>(vars.size());
                vars.push_back(ring->variables()[static_cast<std::size_t>(i)]);
            }
    int block = static_cast<int>(drop.size());
    RingPtr big = std::make_shared<const PolyRing>(ring->field(), vars, MonomialOrder::elim(block));

    std::vector<Polynomial> mapped;
    mapped.reserve(gens.size());
    for (const auto& g : gens) mapped.push_back(map_vars(g, big, position));
    GroebnerBasis gb = groebner_basis(mapped, MonomialOrder::elim(block));

    std::vector<int> back(static_cast<std::size_t>(ring->nvars()), -1);
    for (int i = 0; i < ring->nvars(); ++i)
        back[static_cast<std::size_t>(position[static_cast<std::size_t>(i)])] = i;

    std::vector<Polynomial> out;
    for (const auto& g : gb.elements) {
        bool uses_block = false;
        for (const Term& t : g.terms())
            for (int i = 0; i < block && !uses_block; ++i)
                if (t.mono[i]) uses_block = true;
        if (!uses_block) out.push_back(map_vars(g, ring, back));
    }
    return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    require_same_ring(f, g);
    const auto& F = f.ring()->field();
    Polynomial p = f;
    std::vector<Term> quotient;
    std::uint32_t lc_inv = F.inv(g.leading_coeff());
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        if (!g.leading_monomial().divides(lt.mono))
            throw std::logic_error("exact_divide: division leaves a remainder");
        std::uint32_t c = F.mul(lt.coeff, lc_inv);
        Monomial m = lt.mono.divide(g.leading_monomial());
        quotient.push_back({m, c});
        p = p.submul(c, m, g);
    }
    return Polynomial::from_terms(f.ring(), std::move(quotient));
}

struct QuotientRing::Impl {
    RingPtr ambient;
    std::vector<Polynomial> relations;
    mutable std::mutex mu;
    mutable std::optional<GroebnerBasis> gb;
    mutable std::optional<HilbertData> hilbert;
};

QuotientRing::QuotientRing(RingPtr ambient) : QuotientRing(std::move(ambient), {}) {}

QuotientRing::QuotientRing(RingPtr ambient, std::vector<Polynomial> relations)
    : impl_(std::make_shared<Impl>()) {
    impl_->ambient = std::move(ambient);
    for (const auto& r : relations)
        if (!r.ring()->compatible(*impl_->ambient))
            throw std::invalid_argument("relation outside the ambient ring");
    impl_->relations = drop_zeros(std::move(relations));
}

const RingPtr& QuotientRing::ambient() const { return impl_->ambient; }
const std::vector<Polynomial>& QuotientRing::relations() const { return impl_->relations; }

const GroebnerBasis& QuotientRing::relations_basis() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->gb) {
        if (impl_->relations.empty())
            impl_->gb = GroebnerBasis{PolyRing::with_order(impl_->ambient,
                                                           MonomialOrder::degrevlex()),
                                      {}};
        else
            impl_->gb = groebner_basis(impl_->relations, MonomialOrder::degrevlex());
    }
    return *impl_->gb;
}

const HilbertData& QuotientRing::hilbert() const {
    const GroebnerBasis& gb = relations_basis();
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->hilbert) impl_->hilbert = hilbert_of(gb, impl_->ambient->nvars());
    return *impl_->hilbert;
}

bool QuotientRing::same_ring(const QuotientRing& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_->ambient->compatible(*o.impl_->ambient)) return false;
    if (impl_->relations.size() != o.impl_->relations.size()) return false;
    for (std::size_t i = 0; i < impl_->relations.size(); ++i)
        if (!(impl_->relations[i] == o.impl_->relations[i])) return false;
    return true;
}

struct IdealHandle::Impl {
    QuotientRing ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mu;
    mutable std::map<std::pair<int, int>, GroebnerBasis> bases;
    mutable std::optional<HilbertData> hilbert;

    explicit Impl(QuotientRing r) : ring(std::move(r)) {}
};

IdealHandle::IdealHandle(QuotientRing ring, std::vector<Polynomial> generators)
    : impl_(std::make_shared<Impl>(std::move(ring))) {
    for (const auto& g : generators)
        if (!g.ring()->compatible(*impl_->ring.ambient()))
            throw std::invalid_argument("generator outside the ambient ring");
    impl_->gens = drop_zeros(std::move(generators));
}

const QuotientRing& IdealHandle::ring() const { return impl_->ring; }
const std::vector<Polynomial>& IdealHandle::generators() const { return impl_->gens; }

std::vector<Polynomial> IdealHandle::generators_with_relations() const {
    std::vector<Polynomial> all = impl_->gens;
    for (const auto& r : impl_->ring.relations()) all.push_back(r);
    return all;
}

const GroebnerBasis& IdealHandle::basis(MonomialOrder order) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto key = order_key(order);
    auto it = impl_->bases.find(key);
    if (it != impl_->bases.end()) return it->second;
    std::vector<Polynomial> all = impl_->gens;
    for (const auto& r : impl_->ring.relations()) all.push_back(r);
    GroebnerBasis gb;
    if (all.empty())
        gb = GroebnerBasis{PolyRing::with_order(impl_->ring.ambient(), order), {}};
    else
        gb = groebner_basis(all, order);
    return impl_->bases.emplace(key, std::move(gb)).first->second;
}

const HilbertData& IdealHandle::hilbert() const {
    const GroebnerBasis& gb = basis();
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->hilbert)
        impl_->hilbert = hilbert_of(gb, impl_->ring.ambient()->nvars());
    return *impl_->hilbert;
}

bool IdealHandle::is_unit() const { return basis().is_unit(); }

bool IdealHandle::is_zero() const {
    if (impl_->gens.empty()) return true;
    const GroebnerBasis& k = impl_->ring.relations_basis();
    for (const auto& g : impl_->gens)
        if (!normal_form(g.in_ring(k.ring ? k.ring : g.ring()), k).is_zero()) return false;
    return true;
}

bool IdealHandle::contains(const Polynomial& f) const {
    const GroebnerBasis& gb = basis();
    return normal_form(f.in_ring(gb.ring), gb).is_zero();
}

bool IdealHandle::same_ideal(const IdealHandle& o) const {
    return basis() == o.basis();
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J) {
    if (!I.ring().same_ring(J.ring())) throw std::invalid_argument("ring mismatch");
    std::vector<Polynomial> gens = I.generators();
    for (const auto& g : J.generators()) gens.push_back(g);
    return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle colon(const IdealHandle& I, const IdealHandle& J) {
    if (!I.ring().same_ring(J.ring())) throw std::invalid_argument("ring mismatch");
    if (J.is_zero())
        throw std::invalid_argument("colon by the zero ideal (caller must special-case)");

    std::vector<Polynomial> acc;
    bool first = true;
    std::vector<Polynomial> lhs = I.generators_with_relations();
    if (lhs.empty()) {
        // the zero ideal of a polynomial ring: 0 : g = 0 for g != 0
        return IdealHandle(I.ring(), {});
    }
    for (const auto& g : J.generators()) {
        std::vector<Polynomial> meet = intersect_ambient(lhs, {g});
        std::vector<Polynomial> part;
        part.reserve(meet.size());
        for (const auto& h : meet) part.push_back(exact_divide(h, g));
        if (first) {
            acc = std::move(part);
            first = false;
        } else {
            acc = intersect_ambient(acc, part);
        }
    }
    return IdealHandle(I.ring(), std::move(acc));
}

std::pair<IdealHandle, int> saturate(const IdealHandle& I, const IdealHandle& J) {
    IdealHandle cur = I;
    for (int e = 0; e < 64; ++e) {
        IdealHandle next = colon(cur, J);
        if (next.same_ideal(cur)) return {cur, e};
        cur = next;
    }
    throw std::runtime_error("saturation did not stabilize within 64 colon iterations");
}

IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& keep) {
    const RingPtr& amb = I.ring().ambient();
    std::vector<bool> keep_mask(static_cast<std::size_t>(amb->nvars()), false);
    for (int i : keep) {
        if (i < 0 || i >= amb->nvars()) throw std::invalid_argument("bad variable index");
        keep_mask[static_cast<std::size_t>(i)] = true;
    }
    std::vector<int> drop;
    for (int i = 0; i < amb->nvars(); ++i)
        if (!keep_mask[static_cast<std::size_t>(i)]) drop.push_back(i);
    return IdealHandle(I.ring(), eliminate_ambient(I.generators_with_relations(), drop));
}

namespace {

Polynomial det_laplace(const std::vector<std::vector<Polynomial>>& m,
                       const std::vector<int>& rows, std::vector<int>& cols, const RingPtr& ring,
                       std::size_t level) {
    if (level == rows.size()) return Polynomial::constant(ring, 1);
    Polynomial acc(ring);
    int row = rows[level];
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int col = cols[k];
        if (col < 0) continue;
        const Polynomial& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (entry.is_zero()) continue;
        cols[k] = -1;
        Polynomial sub = det_laplace(m, rows, cols, ring, level + 1);
        cols[k] = col;
        Polynomial term = entry * sub;
        std::size_t used_before = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (cols[j] >= 0) ++used_before;
        acc = (used_before % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

IdealHandle minors(const std::vector<std::vector<Polynomial>>& matrix, int t,
                   const QuotientRing& ring) {
    if (t == 0)
        return IdealHandle(ring, {Polynomial::constant(ring.ambient(), 1)});
    int nrows = static_cast<int>(matrix.size());
    int ncols = nrows ? static_cast<int>(matrix[0].size()) : 0;
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != ncols)
            throw std::invalid_argument("ragged matrix");
    if (t < 0 || t > std::min(nrows, ncols))
        throw std::invalid_argument("minor size out of range");

    std::vector<Polynomial> gens;
    std::vector<int> rows, cols;
    // enumerate size-t subsets in lexicographic order
    std::vector<int> rsel(static_cast<std::size_t>(t)), csel(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) rsel[static_cast<std::size_t>(i)] = i;
    auto next_subset = [](std::vector<int>& s, int n) {
        int k = static_cast<int>(s.size());
        for (int i = k - 1; i >= 0; --i) {
            if (s[static_cast<std::size_t>(i)] < n - k + i) {
                ++s[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        for (int i = 0; i < t; ++i) csel[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<int> cwork = csel;
            Polynomial d = det_laplace(matrix, rsel, cwork, ring.ambient(), 0);
            if (!d.is_zero()) gens.push_back(d);
        } while (next_subset(csel, ncols));
    } while (next_subset(rsel, nrows));
    return IdealHandle(ring, std::move(gens));
}

} // namespace jmult
